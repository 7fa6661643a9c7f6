#include "permlab/relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "permlab/errors.hpp"

namespace permlab {

void check_budget(int n, const EnumerationOptions& options) {
  if (n > options.budget_n) throw BudgetExceeded(n, options.budget_n);
}

namespace {

// Fills cycles: the smallest unused letter always opens the next cycle, so each permutation is
// built exactly once.
void fill_cycles(std::vector<int>& image, std::vector<bool>& used, std::map<int, int>& lengths_left,
                 int n, std::vector<Permutation>& out) {
  int head = 1;
  while (head <= n && used[static_cast<std::size_t>(head)]) ++head;
  if (head > n) {
    out.push_back(Permutation::from_trusted(std::vector<Letter>(image.begin() + 1, image.end())));
    return;
  }
  for (auto& [length, remaining] : lengths_left) {
    if (remaining == 0) continue;
    --remaining;
    used[static_cast<std::size_t>(head)] = true;
    std::vector<int> cycle{head};
    // Extend the cycle with every ordered choice of length - 1 further letters.
    auto extend = [&](auto&& self) -> void {
      if (static_cast<int>(cycle.size()) == length) {
        for (std::size_t i = 0; i < cycle.size(); ++i)
          image[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        fill_cycles(image, used, lengths_left, n, out);
        return;
      }
      for (int next = head + 1; next <= n; ++next) {
        if (used[static_cast<std::size_t>(next)]) continue;
        used[static_cast<std::size_t>(next)] = true;
        cycle.push_back(next);
        self(self);
        cycle.pop_back();
        used[static_cast<std::size_t>(next)] = false;
      }
    };
    extend(extend);
    used[static_cast<std::size_t>(head)] = false;
    ++remaining;
  }
}

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

RelationKey flatten(const YoungTableau& t) {
  RelationKey key;
  for (const auto& row : t.rows()) {
    key.push_back(static_cast<int>(row.size()));
    key.insert(key.end(), row.begin(), row.end());
  }
  return key;
}

void order_classes(std::vector<std::vector<Permutation>>& classes) {
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

std::vector<int> descent_set(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i)
    if (pi(i) > pi(i + 1)) out.push_back(i);
  return out;
}

std::vector<Permutation> conjugacy_class(const CycleType& type) {
  const int n = type.total();
  std::map<int, int> lengths_left;
  for (int part : type.parts) ++lengths_left[part];
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Permutation> out;
  fill_cycles(image, used, lengths_left, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

Relation Relation::parse(std::string_view name) {
  if (name == "conjugacy") return Relation(RelationKind::conjugacy);
  if (name == "order") return Relation(RelationKind::order);
  if (name == "knuth") return Relation(RelationKind::knuth);
  if (name == "toric") return Relation(RelationKind::toric);
  if (name == "descent") return Relation(RelationKind::descent);
  throw ParseError("unknown relation '" + std::string(name) + "'");
}

std::vector<Relation> Relation::all() {
  return {Relation(RelationKind::conjugacy), Relation(RelationKind::order), Relation(RelationKind::knuth),
          Relation(RelationKind::toric), Relation(RelationKind::descent)};
}

std::string Relation::name() const {
  switch (kind_) {
    case RelationKind::conjugacy: return "conjugacy";
    case RelationKind::order: return "order";
    case RelationKind::knuth: return "knuth";
    case RelationKind::toric: return "toric";
    case RelationKind::descent: return "descent";
  }
  return {};
}

RelationKey Relation::key(const Permutation& pi) const {
  switch (kind_) {
    case RelationKind::conjugacy: return cycle_type(pi).parts;
    case RelationKind::order: return {static_cast<int>(order(pi))};
    case RelationKind::knuth: return flatten(insertion_tableau(pi.word()));
    case RelationKind::toric: {
      auto rep = toric_representative(pi);
      return RelationKey(rep.begin(), rep.end());
    }
    case RelationKind::descent: return descent_set(pi);
  }
  return {};
}

std::vector<Permutation> Relation::class_of(const Permutation& pi) const {
  const int n = pi.size();
  switch (kind_) {
    case RelationKind::conjugacy: return conjugacy_class(cycle_type(pi));
    case RelationKind::order: {
      const auto target = order(pi);
      std::vector<Permutation> out;
      for (const auto& shape : partitions(n)) {
        if (lcm_of(shape.parts) != target) continue;
        auto members = conjugacy_class(CycleType{shape.parts});
        out.insert(out.end(), members.begin(), members.end());
      }
      sort_unique(out);
      return out;
    }
    case RelationKind::knuth: {
      const auto p = insertion_tableau(pi.word());
      std::vector<Permutation> out;
      for (const auto& q : standard_tableaux(p.shape())) out.push_back(inverse_rsk(p, q));
      sort_unique(out);
      return out;
    }
    case RelationKind::toric: return toric_class(pi);
    case RelationKind::descent: {
      const auto target = descent_set(pi);
      std::vector<Permutation> out;
      for_each_permutation(n, [&](std::span<const Letter> word) {
        for (int i = 1; i < n; ++i) {
          const bool descent = word[static_cast<std::size_t>(i - 1)] > word[static_cast<std::size_t>(i)];
          if (descent != std::binary_search(target.begin(), target.end(), i)) return;
        }
        out.push_back(Permutation::from_trusted(std::vector<Letter>(word.begin(), word.end())));
      });
      return out;
    }
  }
  return {};
}

std::vector<std::vector<Permutation>> Relation::classes(int n) const {
  std::vector<std::vector<Permutation>> out;
  switch (kind_) {
    case RelationKind::conjugacy:
      for (const auto& shape : partitions(n)) out.push_back(conjugacy_class(CycleType{shape.parts}));
      break;
    case RelationKind::order: {
      std::map<std::uint64_t, std::vector<Permutation>> by_order;
      for (const auto& shape : partitions(n)) {
        auto members = conjugacy_class(CycleType{shape.parts});
        auto& bucket = by_order[lcm_of(shape.parts)];
        bucket.insert(bucket.end(), members.begin(), members.end());
      }
      for (auto& [_, members] : by_order) {
        sort_unique(members);
        out.push_back(std::move(members));
      }
      break;
    }
    case RelationKind::knuth:
      for (const auto& shape : partitions(n)) {
        const auto tableaux = standard_tableaux(shape);
        for (const auto& p : tableaux) {
          std::vector<Permutation> members;
          members.reserve(tableaux.size());
          for (const auto& q : tableaux) members.push_back(inverse_rsk(p, q));
          sort_unique(members);
          out.push_back(std::move(members));
        }
      }
      break;
    case RelationKind::toric:
      for_each_permutation(n, [&](std::span<const Letter> word) {
        auto pi = Permutation::from_trusted(std::vector<Letter>(word.begin(), word.end()));
        if (toric_representative(pi) == pi) out.push_back(toric_class(pi));
      });
      break;
    case RelationKind::descent: {
      std::map<RelationKey, std::vector<Permutation>> groups;
      for_each_permutation(n, [&](std::span<const Letter> word) {
        auto pi = Permutation::from_trusted(std::vector<Letter>(word.begin(), word.end()));
        groups[descent_set(pi)].push_back(std::move(pi));
      });
      for (auto& [_, members] : groups) out.push_back(std::move(members));
      break;
    }
  }
  order_classes(out);
  return out;
}

std::vector<SymmetryWord> Relation::symmetry_generators() const {
  using enum Symmetry;
  switch (kind_) {
    case RelationKind::conjugacy:
    case RelationKind::order: return {{inverse}, {reverse, complement}};
    case RelationKind::knuth:
    case RelationKind::descent: return {{reverse}, {complement}};
    case RelationKind::toric: return {{reverse}, {complement}, {inverse}};
  }
  return {};
}

std::vector<SymmetryWord> Relation::symmetries() const { return symmetry_closure(symmetry_generators()); }

bool Relation::extends_to_patterns() const noexcept {
  return kind_ == RelationKind::knuth || kind_ == RelationKind::toric;
}

std::vector<BivincularPattern> Relation::pattern_class(const BivincularPattern& pattern) const {
  std::vector<BivincularPattern> out;
  if (kind_ == RelationKind::knuth) {
    for (const auto& shape : class_of(pattern.shape()))
      out.emplace_back(shape, pattern.positions(), pattern.values());
  } else if (kind_ == RelationKind::toric) {
    std::set<BivincularPattern> seen;
    for (auto p = pattern; seen.insert(p).second; p = shift(p)) out.push_back(p);
  } else {
    throw std::invalid_argument(name() + " equivalence does not extend to patterns");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ClassCensus::class_count() const {
  std::uint64_t total = 0;
  for (const auto& [_, count] : by_size) total += count;
  return total;
}

std::uint64_t ClassCensus::total() const {
  std::uint64_t total = 0;
  for (const auto& [size, count] : by_size) total += size * count;
  return total;
}

ClassCensus& ClassCensus::merge(const ClassCensus& other) {
  for (const auto& [size, count] : other.by_size) by_size[size] += count;
  return *this;
}

ClassCensus census(const Relation& relation, int n, const EnumerationOptions& options) {
  check_budget(n, options);
  ClassCensus result;
  result.n = n;
  for (const auto& members : relation.classes(n)) ++result.by_size[members.size()];
  return result;
}

}  // namespace permlab
