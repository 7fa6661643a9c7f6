#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/pattern.hpp"
#include "permlab/relations.hpp"

// Named patterns. X lists the position adjacencies (0 and k pin to the left and right ends),
// Y lists the value adjacencies (0 and k pin to the bottom and top values).
namespace permlab::catalog {

/// (1, {0}, {0}): a leading 1. Conjugacy: derangements. Toric: no successor pairs.
const BivincularPattern& derangement();
/// (23..k1, {0..k-1}, {0..k-1}): a prefix cycle (1 2 .. k). Conjugacy: no k-cycle.
BivincularPattern k_cycle(int k);
/// (23..k1, {0..k-2}, {0..k-1}); for k = 1 the pattern (1, {}, {0}). Conjugacy: every cycle
/// shorter than k.
BivincularPattern bounded_cycles(int k);
/// (231, {0,1}, {0,1,2}). Conjugacy: involutions.
const BivincularPattern& involution();
/// (21, {1}, {0,2}). Conjugacy: the identity and transpositions.
const BivincularPattern& transposition();
/// (231, {}, {3}). Conjugacy: permutations moving at most two letters.
const BivincularPattern& central_polygonal();
/// (132, {3}, {0,1,3}). Conjugacy: the identity and fixed-point-free involutions.
const BivincularPattern& fpf_involution();
/// (132, {3}, {1,2,3}). Conjugacy: the identity and 3-cycles.
const BivincularPattern& three_cycle();
/// (231, {0}, {1,2,3}). Conjugacy: the identity, 2-cycles and 3-cycles.
const BivincularPattern& two_three_cycle();
/// (231, {}, {0}). Knuth: hook-shaped P with 2 in the first row, plus the decreasing word.
const BivincularPattern& knuth_graphs();
/// (12, {0}, {1,2}). Knuth class-matchers: shifted Catalan numbers.
const BivincularPattern& knuth_matching();
/// (123, {1,2}, {}): three adjacent increasing letters.
const BivincularPattern& vincular_123();
/// (12..k, {}, {0..k-1}).
BivincularPattern increasing_from_bottom(int k);
/// (12..k, {}, {1..k-1}).
BivincularPattern increasing_adjacent_values(int k);
/// (213, {}, {1,3}). Toric: natural permutations.
const BivincularPattern& totient();
/// (213, {}, {1}). Toric: divisor permutations.
const BivincularPattern& divisor();
/// (12, {0,1}, {0,1}). Toric: no modular 3-sequences.
const BivincularPattern& modular_three();
/// (3421, {2,3}, {1,2,4}) and its shift (3214, {0,1}, {0,2,3}).
const BivincularPattern& toric_example();
/// (1324, {2}, {}) and (1243, {3}, {}): shift partners with top value outside Y, not Wilf
/// equivalent.
const BivincularPattern& shift_counterexample_left();
const BivincularPattern& shift_counterexample_right();

/// Maps a degree n to the sequence term at n. Throws BudgetExceeded past the options' cap.
using Generator = std::function<std::uint64_t(int n, const EnumerationOptions& options)>;

struct SequenceTable {
  std::string id;
  int offset = 1;  // degree of values[0]
  std::vector<std::int64_t> values;
  std::string description;
  Generator generator;

  /// The printed value at degree n, if the table covers it.
  std::optional<std::int64_t> at(int n) const;
  int last() const { return offset + static_cast<int>(values.size()) - 1; }
};

/// Every embedded table, sorted by id.
const std::vector<SequenceTable>& sequence_tables();
/// Throws std::out_of_range for an unknown id.
const SequenceTable& sequence_table(std::string_view id);

struct SequenceEntry {
  int n = 0;
  std::optional<std::int64_t> expected;
  std::int64_t actual = 0;
  bool equal() const { return expected && *expected == actual; }
};

struct SequenceReport {
  std::string id;
  std::vector<SequenceEntry> entries;
  bool ok() const;
};

/// Compares `values`, indexed from `first_n`, against the table.
SequenceReport sequence_check(std::string_view id, const std::vector<std::int64_t>& values, int first_n);
/// Recomputes the table through its generator for every printed degree within budget.
SequenceReport sequence_check(std::string_view id, const EnumerationOptions& options = {});

}  // namespace permlab::catalog
