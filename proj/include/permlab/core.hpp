#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

using Letter = int;

/// A permutation of {1..n} in one-line notation. Positions and letters are both 1-based in the
/// public interface; `word()` exposes the underlying 0-indexed storage.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `word` is a bijection on {1..n}; throws ParseError otherwise.
  explicit Permutation(std::vector<Letter> word);

  /// Skips validation. For hot loops whose construction already guarantees a bijection.
  static Permutation from_trusted(std::vector<Letter> word) noexcept;

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  /// Digit string ("2413") or comma-separated ("5,10,4,9,3,8,2,7,1,6").
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }

  /// Letter at 1-based position i.
  Letter operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  Letter operator[](std::size_t index) const { return word_[index]; }

  std::span<const Letter> word() const noexcept { return word_; }
  auto begin() const noexcept { return word_.begin(); }
  auto end() const noexcept { return word_.end(); }

  /// 1-based position of `letter`.
  int position_of(Letter letter) const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Letter> word_;
};

std::string format(std::span<const Letter> word);

/// Cycle lengths, sorted descending.
struct CycleType {
  std::vector<int> parts;

  int total() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.parts <=> b.parts; }
};

/// A circular arrangement of {0..n}, stored rotated so that 0 is at the front.
class CircularPermutation {
 public:
  CircularPermutation() : word_{0} {}

  /// Any rotation of a bijection on {0..n}; throws ParseError when it is not one.
  explicit CircularPermutation(std::vector<Letter> word);

  static CircularPermutation parse(std::string_view text);

  /// Degree n; the arrangement holds n + 1 letters.
  int degree() const noexcept { return static_cast<int>(word_.size()) - 1; }
  std::span<const Letter> word() const noexcept { return word_; }

  std::string str() const;

  friend bool operator==(const CircularPermutation&, const CircularPermutation&) = default;
  friend auto operator<=>(const CircularPermutation& a, const CircularPermutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Letter> word_;
};

// Group operations and the r/c/i symmetries.

/// (sigma o tau)(i) = sigma(tau(i)). Throws std::invalid_argument on a length mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& pi);
Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);

CycleType cycle_type(const Permutation& pi);
std::uint64_t order(const Permutation& pi);
std::uint64_t lcm_of(std::span<const int> parts);

// Toric action.

/// Prepends 0.
CircularPermutation to_circular(const Permutation& pi);
/// Reads the arrangement starting after 0.
Permutation from_circular(const CircularPermutation& lambda);

/// Adds m to every letter modulo n + 1.
CircularPermutation oplus(const CircularPermutation& lambda, long long m);
/// pi (+) m: shift the circular word 0pi by m and read it back from 0. Any integer m is reduced
/// modulo n + 1.
Permutation oplus(const Permutation& pi, long long m);

/// Reads the circular word in the opposite direction.
CircularPermutation reverse(const CircularPermutation& lambda);
/// v -> -v modulo n + 1.
CircularPermutation complement(const CircularPermutation& lambda);

/// {pi (+) m : m = 0..n}, sorted and deduplicated.
std::vector<Permutation> toric_class(const Permutation& pi);

/// Lexicographically least member of the toric class.
Permutation toric_representative(const Permutation& pi);

/// Every permutation of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Calls visit(word) for every permutation of {1..n} in lexicographic order, optionally fixing
/// the first letter (1-based, 0 for none). The span is only valid during the call.
template <class Visit>
void for_each_permutation(int n, Visit&& visit, Letter first = 0);

std::uint64_t factorial(int n);

}  // namespace permlab

#include <algorithm>
#include <numeric>

namespace permlab {

template <class Visit>
void for_each_permutation(int n, Visit&& visit, Letter first) {
  std::vector<Letter> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  if (first == 0) {
    do {
      visit(std::span<const Letter>(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return;
  }
  std::rotate(word.begin(), word.begin() + (first - 1), word.begin() + first);
  do {
    visit(std::span<const Letter>(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

}  // namespace permlab
