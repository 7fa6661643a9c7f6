#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/core.hpp"

namespace permlab {

/// A subset of {0..k} for a pattern of length k < 63, stored as a bit mask.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> members);
  static IndexSet from_bits(std::uint64_t bits) { return IndexSet(bits); }
  /// {first, ..., last}; empty when last < first.
  static IndexSet range(int first, int last);

  bool contains(int m) const noexcept { return m >= 0 && m < 64 && ((bits_ >> m) & 1U); }
  void insert(int m);
  bool empty() const noexcept { return bits_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }
  int max() const noexcept;  // -1 when empty
  std::vector<int> members() const;

  /// {k - m}.
  IndexSet reflected(int k) const;
  /// {(m + delta) mod modulus}.
  IndexSet rotated(int delta, int modulus) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// A bivincular pattern (p, X, Y): classical shape p of length k, position adjacencies X and
/// value adjacencies Y, both subsets of {0..k}. Elements 0 and k of either set pin the
/// occurrence to the ends of the host's position or value range.
class BivincularPattern {
 public:
  BivincularPattern() = default;
  /// Throws std::invalid_argument if X or Y reaches beyond k.
  BivincularPattern(Permutation shape, IndexSet positions = {}, IndexSet values = {});

  /// `<perm>[;x=<ints>][;y=<ints>]`, e.g. `3421;x=2,3;y=1,2,4`. Throws ParseError.
  static BivincularPattern parse(std::string_view text);

  const Permutation& shape() const noexcept { return shape_; }
  const IndexSet& positions() const noexcept { return positions_; }
  const IndexSet& values() const noexcept { return values_; }
  int length() const noexcept { return shape_.size(); }
  bool is_classical() const noexcept { return positions_.empty() && values_.empty(); }

  /// Always emits both clauses: `231;x=;y=`.
  std::string str() const;

  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;
  friend auto operator<=>(const BivincularPattern&, const BivincularPattern&) = default;

 private:
  Permutation shape_;
  IndexSet positions_;
  IndexSet values_;
};

/// 1-based, strictly increasing host positions of one occurrence.
struct Occurrence {
  std::vector<int> positions;

  /// Distance from the first matched position to the last.
  int area() const { return positions.empty() ? 0 : positions.back() - positions.front(); }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Letters of pi at the occurrence's positions.
std::vector<Letter> occurrence_values(const Occurrence& occ, const Permutation& pi);

/// Pattern compiled for repeated matching against many hosts.
class Matcher {
 public:
  explicit Matcher(BivincularPattern pattern);

  const BivincularPattern& pattern() const noexcept { return pattern_; }

  /// Calls visit(positions) for each occurrence in lexicographic order of positions; the span
  /// holds 1-based positions and is valid only during the call. Stops early when visit
  /// returns false.
  void for_each(std::span<const Letter> host,
                const std::function<bool(std::span<const int>)>& visit) const;

  bool matches(std::span<const Letter> host) const;
  bool avoids(std::span<const Letter> host) const { return !matches(host); }

 private:
  template <class Visit>
  bool search(std::span<const Letter> host, std::span<const int> where, Visit& visit) const;

  BivincularPattern pattern_;
  std::vector<int> rank_at_;      // 0-based: rank (1..k) of pattern index t
  std::vector<int> index_of_rank_;  // 1-based rank -> pattern index
};

/// Every occurrence, sorted lexicographically by positions.
std::vector<Occurrence> occurrences(const BivincularPattern& pattern, const Permutation& pi);
bool matches(const BivincularPattern& pattern, const Permutation& pi);
bool avoids(const BivincularPattern& pattern, const Permutation& pi);

/// Occurrences of least area. Throws NoOccurrence when pi avoids the pattern.
std::vector<Occurrence> minimal_occurrences(const BivincularPattern& pattern, const Permutation& pi);

/// (p^r, k - X, Y).
BivincularPattern reverse(const BivincularPattern& pattern);
/// (p^c, X, k - Y).
BivincularPattern complement(const BivincularPattern& pattern);
/// (p^i, Y, X).
BivincularPattern inverse(const BivincularPattern& pattern);

/// The (+)1 shift: (p (+) 1, X - l, Y + 1) with the sets taken modulo k + 1, where l is the
/// position of the largest letter k in p.
BivincularPattern shift(const BivincularPattern& pattern);

/// Every bivincular pattern of length k: k! * 2^(k+1) * 2^(k+1) of them, in sorted order.
std::vector<BivincularPattern> all_patterns(int k);

// Symmetry words: compositions of r, c, i applied left to right.

enum class Symmetry { reverse, complement, inverse };
using SymmetryWord = std::vector<Symmetry>;

std::string to_string(const SymmetryWord& word);
Permutation apply(const SymmetryWord& word, const Permutation& pi);
BivincularPattern apply(const SymmetryWord& word, const BivincularPattern& pattern);

/// Group generated by the given words, one shortest word per element, identity first.
std::vector<SymmetryWord> symmetry_closure(const std::vector<SymmetryWord>& generators);

}  // namespace permlab
