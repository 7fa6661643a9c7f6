#include "permlab/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "permlab/census.hpp"
#include "permlab/errors.hpp"

namespace permlab::catalog {

namespace {

BivincularPattern make(std::string_view shape, IndexSet x, IndexSet y) {
  return BivincularPattern(Permutation::parse(shape), x, y);
}

// 23..k1, the one-line form of the cycle (1 2 .. k).
Permutation cycle_word(int k) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  std::vector<Letter> word;
  for (int i = 2; i <= k; ++i) word.push_back(i);
  word.push_back(1);
  return Permutation::from_trusted(std::move(word));
}

}  // namespace

const BivincularPattern& derangement() {
  static const auto p = make("1", {0}, {0});
  return p;
}

BivincularPattern k_cycle(int k) { return BivincularPattern(cycle_word(k), IndexSet::range(0, k - 1), IndexSet::range(0, k - 1)); }

BivincularPattern bounded_cycles(int k) {
  return BivincularPattern(cycle_word(k), IndexSet::range(0, k - 2), IndexSet::range(0, k - 1));
}

const BivincularPattern& involution() {
  static const auto p = make("231", {0, 1}, {0, 1, 2});
  return p;
}

const BivincularPattern& transposition() {
  static const auto p = make("21", {1}, {0, 2});
  return p;
}

const BivincularPattern& central_polygonal() {
  static const auto p = make("231", {}, {3});
  return p;
}

const BivincularPattern& fpf_involution() {
  static const auto p = make("132", {3}, {0, 1, 3});
  return p;
}

const BivincularPattern& three_cycle() {
  static const auto p = make("132", {3}, {1, 2, 3});
  return p;
}

const BivincularPattern& two_three_cycle() {
  static const auto p = make("231", {0}, {1, 2, 3});
  return p;
}

const BivincularPattern& knuth_graphs() {
  static const auto p = make("231", {}, {0});
  return p;
}

const BivincularPattern& knuth_matching() {
  static const auto p = make("12", {0}, {1, 2});
  return p;
}

const BivincularPattern& vincular_123() {
  static const auto p = make("123", {1, 2}, {});
  return p;
}

BivincularPattern increasing_from_bottom(int k) {
  return BivincularPattern(Permutation::identity(k), {}, IndexSet::range(0, k - 1));
}

BivincularPattern increasing_adjacent_values(int k) {
  return BivincularPattern(Permutation::identity(k), {}, IndexSet::range(1, k - 1));
}

const BivincularPattern& totient() {
  static const auto p = make("213", {}, {1, 3});
  return p;
}

const BivincularPattern& divisor() {
  static const auto p = make("213", {}, {1});
  return p;
}

const BivincularPattern& modular_three() {
  static const auto p = make("12", {0, 1}, {0, 1});
  return p;
}

const BivincularPattern& toric_example() {
  static const auto p = make("3421", {2, 3}, {1, 2, 4});
  return p;
}

const BivincularPattern& shift_counterexample_left() {
  static const auto p = make("1324", {2}, {});
  return p;
}

const BivincularPattern& shift_counterexample_right() {
  static const auto p = make("1243", {3}, {});
  return p;
}

std::optional<std::int64_t> SequenceTable::at(int n) const {
  if (n < offset || n > last()) return std::nullopt;
  return values[static_cast<std::size_t>(n - offset)];
}

namespace {

Generator avoiders(BivincularPattern pattern, RelationKind kind) {
  return [pattern = std::move(pattern), kind](int n, const EnumerationOptions& options) {
    return class_avoiders(pattern, Relation(kind), n, options).count;
  };
}

Generator matchers(BivincularPattern pattern, RelationKind kind) {
  return [pattern = std::move(pattern), kind](int n, const EnumerationOptions& options) {
    return class_matchers(pattern, Relation(kind), n, options).count;
  };
}

Generator class_count(RelationKind kind) {
  return [kind](int n, const EnumerationOptions& options) { return census(Relation(kind), n, options).class_count(); };
}

std::vector<SequenceTable> build_tables() {
  using enum RelationKind;
  std::vector<SequenceTable> t{
      {"A000041", 1, {1, 2, 3, 5, 7, 11, 15, 22, 30}, "partitions of n; conjugacy classes of S_n",
       class_count(conjugacy)},
      {"A000079", 1, {1, 2, 4, 8, 16, 32, 64, 128, 256}, "2^(n-1); Knuth class avoiders of 231",
       avoiders(BivincularPattern(Permutation::parse("231")), knuth)},
      {"A000085", 1, {1, 2, 4, 10, 26, 76, 232, 764, 2620}, "involutions; conjugacy class avoiders",
       avoiders(involution(), conjugacy)},
      {"A000108", 2, {1, 2, 5, 14, 42, 132, 429, 1430}, "Catalan numbers shifted; Knuth class matchers",
       matchers(knuth_matching(), knuth)},
      {"A000124", 1, {1, 2, 4, 7, 11, 16, 22, 29, 37}, "central polygonal numbers; conjugacy class avoiders",
       avoiders(central_polygonal(), conjugacy)},
      {"A000166", 1, {0, 1, 2, 9, 44, 265, 1854, 14833, 133496}, "derangements; conjugacy class avoiders",
       avoiders(derangement(), conjugacy)},
      {"A000325", 1, {1, 2, 5, 12, 27, 58, 121, 248, 503}, "2^n - n; descent class avoiders of 321",
       avoiders(BivincularPattern(Permutation::parse("321")), descent)},
      {"A000757", 1, {0, 1, 1, 8, 36, 229, 1625, 13208}, "cyclic permutations without successor pairs; toric",
       avoiders(derangement(), toric)},
      {"A002619", 1, {1, 2, 3, 8, 24, 108, 640, 4492}, "number of toric classes in S_n", class_count(toric)},
      {"A009490", 1, {1, 2, 3, 4, 6, 6, 9, 11, 14}, "distinct orders of permutations; order classes",
       class_count(order)},
      {"A112849", 1, {1, 2, 4, 11, 36, 127, 463, 1717, 6436}, "Knuth class avoiders of the graphs pattern",
       avoiders(knuth_graphs(), knuth)},
      {"A165962", 1, {1, 1, 5, 18, 95, 600, 4307, 35168}, "no modular 3-sequences; toric class avoiders",
       avoiders(modular_three(), toric)},
      {"fpf-involutions", 1, {1, 2, 3, 4, 1, 16, 1, 106, 1},
       "identity and fixed-point-free involutions; conjugacy class avoiders", avoiders(fpf_involution(), conjugacy)},
      {"id-2-3-cycles", 1, {1, 2, 4, 15, 31, 56, 92, 141, 205},
       "identity, 2-cycles and 3-cycles; conjugacy class avoiders", avoiders(two_three_cycle(), conjugacy)},
      {"id-3-cycles", 1, {1, 2, 3, 9, 21, 41, 71, 113, 169}, "identity and 3-cycles; conjugacy class avoiders",
       avoiders(three_cycle(), conjugacy)},
      {"id-transpositions", 1, {1, 1, 4, 7, 11, 16, 22, 29, 37},
       "identity and transpositions; conjugacy class avoiders", avoiders(transposition(), conjugacy)},
      {"order-no-fixed-point", 1, {0, 1, 2, 6, 44, 0, 1644, 7728, 84384},
       "order classes avoiding a fixed point 1; order class avoiders", avoiders(derangement(), order)},
  };
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return t;
}

}  // namespace

const std::vector<SequenceTable>& sequence_tables() {
  static const auto tables = build_tables();
  return tables;
}

const SequenceTable& sequence_table(std::string_view id) {
  for (const auto& t : sequence_tables())
    if (t.id == id) return t;
  throw std::out_of_range("unknown sequence id '" + std::string(id) + "'");
}

bool SequenceReport::ok() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const SequenceEntry& e) { return e.equal(); });
}

SequenceReport sequence_check(std::string_view id, const std::vector<std::int64_t>& values, int first_n) {
  const auto& table = sequence_table(id);
  SequenceReport report{table.id, {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int n = first_n + static_cast<int>(i);
    report.entries.push_back({n, table.at(n), values[i]});
  }
  return report;
}

SequenceReport sequence_check(std::string_view id, const EnumerationOptions& options) {
  const auto& table = sequence_table(id);
  std::vector<std::int64_t> values;
  const int last = std::min(table.last(), options.budget_n);
  for (int n = table.offset; n <= last; ++n)
    values.push_back(static_cast<std::int64_t>(table.generator(n, options)));
  return sequence_check(id, values, table.offset);
}

}  // namespace permlab::catalog
