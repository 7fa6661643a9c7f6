#pragma once

#include <cstdint>
#include <map>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/core.hpp"
#include "permlab/executor.hpp"
#include "permlab/pattern.hpp"
#include "permlab/tableau.hpp"

namespace permlab {

/// Largest degree scanned exhaustively unless the caller raises it.
inline constexpr int kDefaultBudgetN = 9;

/// Knobs shared by every exhaustive scan.
struct EnumerationOptions {
  int budget_n = kDefaultBudgetN;
  bool members = false;
  Executor executor{};
  std::stop_token stop{};
};

/// Throws BudgetExceeded when n is over the cap.
void check_budget(int n, const EnumerationOptions& options);

enum class RelationKind { conjugacy, order, knuth, toric, descent };

/// Canonical class label. Two permutations of the same degree are related iff their keys match.
using RelationKey = std::vector<int>;

/// An equivalence relation on S_n given by a canonical key and a class generator.
class Relation {
 public:
  explicit Relation(RelationKind kind) : kind_(kind) {}

  /// "conjugacy", "order", "knuth", "toric" or "descent". Throws ParseError otherwise.
  static Relation parse(std::string_view name);
  static std::vector<Relation> all();

  RelationKind kind() const noexcept { return kind_; }
  std::string name() const;

  RelationKey key(const Permutation& pi) const;

  /// The full class of pi inside S_n, sorted.
  std::vector<Permutation> class_of(const Permutation& pi) const;

  /// Every class of S_n, each sorted, ordered by least member.
  std::vector<std::vector<Permutation>> classes(int n) const;

  /// Generators of the r/c/i compositions that preserve the relation.
  std::vector<SymmetryWord> symmetry_generators() const;
  /// The whole compatible group, identity first.
  std::vector<SymmetryWord> symmetries() const;

  /// Knuth and toric equivalence carry over to bivincular patterns.
  bool extends_to_patterns() const noexcept;

  /// The pattern class of `pattern`, sorted. Knuth: Knuth class of the classical shape with X
  /// and Y unchanged. Toric: the orbit under shift. Throws std::invalid_argument for relations
  /// that do not extend.
  std::vector<BivincularPattern> pattern_class(const BivincularPattern& pattern) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  RelationKind kind_;
};

/// Positions i with pi(i) > pi(i+1), 1-based.
std::vector<int> descent_set(const Permutation& pi);

/// Every permutation with the given cycle type, sorted.
std::vector<Permutation> conjugacy_class(const CycleType& type);

/// Class sizes and how many classes have each size.
struct ClassCensus {
  int n = 0;
  std::map<std::uint64_t, std::uint64_t> by_size;

  std::uint64_t class_count() const;
  /// Sum of size * count; equals n! for a complete census.
  std::uint64_t total() const;

  /// Adds counts; associative and order independent.
  ClassCensus& merge(const ClassCensus& other);

  friend bool operator==(const ClassCensus&, const ClassCensus&) = default;
};

ClassCensus census(const Relation& relation, int n, const EnumerationOptions& options = {});

}  // namespace permlab
