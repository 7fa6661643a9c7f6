#include "permlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>

#include "permlab/catalog.hpp"
#include "permlab/errors.hpp"

namespace permlab {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::class_avoid: return "class-avoid";
    case Mode::class_match: return "class-match";
    case Mode::avoid: return "avoid";
    case Mode::match: return "match";
  }
  return {};
}

Mode parse_mode(std::string_view text) {
  if (text == "class-avoid") return Mode::class_avoid;
  if (text == "class-match") return Mode::class_match;
  if (text == "avoid") return Mode::avoid;
  if (text == "match") return Mode::match;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

namespace {

std::vector<BivincularPattern> nontrivial(const std::vector<BivincularPattern>& patterns) {
  std::vector<BivincularPattern> out;
  for (const auto& p : patterns)
    if (p.length() > 0) out.push_back(p);
  return out;
}

std::vector<Matcher> compile(const std::vector<BivincularPattern>& patterns) {
  std::vector<Matcher> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.emplace_back(p);
  return out;
}

bool avoids_all(const std::vector<Matcher>& matchers, std::span<const Letter> word) {
  return std::all_of(matchers.begin(), matchers.end(), [&](const Matcher& m) { return m.avoids(word); });
}

bool matches_all(const std::vector<Matcher>& matchers, std::span<const Letter> word) {
  return std::all_of(matchers.begin(), matchers.end(), [&](const Matcher& m) { return m.matches(word); });
}

// Evaluates a class-level predicate once per class, in parallel over classes.
std::vector<char> classify(const std::vector<std::vector<Permutation>>& classes,
                           const std::vector<Matcher>& matchers, bool want_avoid,
                           const EnumerationOptions& options) {
  std::vector<char> keep(classes.size(), 0);
  std::atomic<bool> cancelled{false};
  constexpr std::size_t kBlock = 32;
  const std::size_t blocks = (classes.size() + kBlock - 1) / kBlock;
  run_tasks(options.executor, blocks, [&](std::size_t block) {
    const std::size_t stop = std::min(classes.size(), (block + 1) * kBlock);
    for (std::size_t c = block * kBlock; c < stop; ++c) {
      if (options.stop.stop_requested()) {
        cancelled = true;
        return;
      }
      const auto& members = classes[c];
      keep[c] = std::all_of(members.begin(), members.end(), [&](const Permutation& pi) {
        return want_avoid ? avoids_all(matchers, pi.word()) : matches_all(matchers, pi.word());
      });
    }
  });
  if (cancelled) throw Cancelled();
  return keep;
}

EnumerationResult class_level(Mode mode, const std::vector<BivincularPattern>& patterns,
                              const Relation& relation, int n, const EnumerationOptions& options) {
  check_budget(n, options);
  EnumerationResult result;
  result.n = n;
  result.patterns = patterns;
  result.relation = relation;
  result.mode = mode;

  const auto classes = relation.classes(n);
  const auto keep = classify(classes, compile(nontrivial(patterns)), mode == Mode::class_avoid, options);
  std::vector<Permutation> members;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!keep[c]) continue;
    result.count += classes[c].size();
    if (options.members) members.insert(members.end(), classes[c].begin(), classes[c].end());
  }
  if (options.members) {
    std::sort(members.begin(), members.end());
    result.members = std::move(members);
  }
  return result;
}

EnumerationResult permutation_level(Mode mode, const std::vector<BivincularPattern>& patterns, int n,
                                    const EnumerationOptions& options) {
  check_budget(n, options);
  EnumerationResult result;
  result.n = n;
  result.patterns = patterns;
  result.mode = mode;

  const auto matchers = compile(nontrivial(patterns));
  const bool want_avoid = mode == Mode::avoid;
  // One task per first letter; lexicographic order is the concatenation in task order.
  const std::size_t tasks = n == 0 ? 1 : static_cast<std::size_t>(n);
  std::vector<std::uint64_t> counts(tasks, 0);
  std::vector<std::vector<Permutation>> parts(tasks);
  std::atomic<bool> cancelled{false};
  run_tasks(options.executor, tasks, [&](std::size_t task) {
    if (options.stop.stop_requested()) {
      cancelled = true;
      return;
    }
    const Letter first = n == 0 ? 0 : static_cast<Letter>(task + 1);
    for_each_permutation(
        n,
        [&](std::span<const Letter> word) {
          const bool keep = want_avoid ? avoids_all(matchers, word) : matches_all(matchers, word);
          if (!keep) return;
          ++counts[task];
          if (options.members)
            parts[task].push_back(Permutation::from_trusted(std::vector<Letter>(word.begin(), word.end())));
        },
        first);
  });
  if (cancelled) throw Cancelled();
  result.count = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (options.members) {
    std::vector<Permutation> members;
    for (auto& part : parts) members.insert(members.end(), part.begin(), part.end());
    result.members = std::move(members);
  }
  return result;
}

}  // namespace

EnumerationResult enumerate(Mode mode, const std::vector<BivincularPattern>& patterns,
                            const std::optional<Relation>& relation, int n, const EnumerationOptions& options) {
  if (mode == Mode::class_avoid || mode == Mode::class_match) {
    if (!relation) throw std::invalid_argument(to_string(mode) + " needs a relation");
    return class_level(mode, patterns, *relation, n, options);
  }
  return permutation_level(mode, patterns, n, options);
}

EnumerationResult class_avoiders(const std::vector<BivincularPattern>& patterns, const Relation& relation,
                                 int n, const EnumerationOptions& options) {
  return class_level(Mode::class_avoid, patterns, relation, n, options);
}

EnumerationResult class_avoiders(const BivincularPattern& pattern, const Relation& relation, int n,
                                 const EnumerationOptions& options) {
  return class_avoiders(std::vector<BivincularPattern>{pattern}, relation, n, options);
}

EnumerationResult class_matchers(const std::vector<BivincularPattern>& patterns, const Relation& relation,
                                 int n, const EnumerationOptions& options) {
  return class_level(Mode::class_match, patterns, relation, n, options);
}

EnumerationResult class_matchers(const BivincularPattern& pattern, const Relation& relation, int n,
                                 const EnumerationOptions& options) {
  return class_matchers(std::vector<BivincularPattern>{pattern}, relation, n, options);
}

EnumerationResult avoid_all(const std::vector<BivincularPattern>& patterns, int n,
                            const EnumerationOptions& options) {
  return permutation_level(Mode::avoid, patterns, n, options);
}

EnumerationResult match_all(const std::vector<BivincularPattern>& patterns, int n,
                            const EnumerationOptions& options) {
  return permutation_level(Mode::match, patterns, n, options);
}

StabilityReport is_stable(const BivincularPattern& pattern, const Relation& relation, int n_max,
                          const EnumerationOptions& options) {
  if (!relation.extends_to_patterns()) {
    throw std::invalid_argument(relation.name() + " equivalence does not extend to patterns");
  }
  check_budget(n_max, options);
  StabilityReport report;
  report.pattern_class = relation.pattern_class(pattern);
  auto with_members = options;
  with_members.members = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto lhs = *class_avoiders(pattern, relation, n, with_members).members;
    const auto rhs = *avoid_all(report.pattern_class, n, with_members).members;
    if (lhs == rhs) continue;
    std::vector<Permutation> only_lhs, only_rhs;
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(only_lhs));
    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(only_rhs));
    report.stable = false;
    if (!only_lhs.empty() && (only_rhs.empty() || only_lhs.front() < only_rhs.front())) {
      report.witness = StabilityWitness{n, only_lhs.front(), true};
    } else {
      report.witness = StabilityWitness{n, only_rhs.front(), false};
    }
    break;
  }
  return report;
}

namespace {

// Union-find over row indices, always keeping the smaller index as root.
struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

SurveyResult survey(const Relation& relation, int length, int n_first, int n_last,
                    const EnumerationOptions& options) {
  if (length < 0 || length > 4) throw std::invalid_argument("survey length must be in 0..4");
  if (n_first < 0 || n_last < n_first) throw std::invalid_argument("survey needs 0 <= n_first <= n_last");
  check_budget(n_last, options);

  SurveyResult result;
  result.relation = relation;
  result.length = length;
  result.n_first = n_first;
  result.n_last = n_last;

  const auto patterns = all_patterns(length);
  result.total_patterns = patterns.size();
  const auto group = relation.symmetries();

  std::map<BivincularPattern, std::size_t> row_of;
  for (const auto& p : patterns) {
    if (row_of.contains(p)) continue;
    std::vector<BivincularPattern> orbit;
    for (const auto& g : group) orbit.push_back(apply(g, p));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    const std::size_t row = result.rows.size();
    for (const auto& q : orbit) row_of.emplace(q, row);
    SurveyRow entry;
    entry.representative = orbit.front();
    entry.orbit_size = orbit.size();
    result.rows.push_back(std::move(entry));
  }

  Components components(result.rows.size());
  if (relation.kind() == RelationKind::toric) {
    for (const auto& p : patterns) {
      if (!p.values().contains(p.length())) continue;
      components.join(row_of.at(p), row_of.at(shift(p)));
    }
  }
  std::size_t merged = 0;
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    result.rows[r].shift_class = components.find(r);
    if (result.rows[r].shift_class == r) ++merged;
  }
  result.shift_merged_classes = merged;

  for (int n = n_first; n <= n_last; ++n) {
    const auto classes = relation.classes(n);
    std::vector<std::uint64_t> counts(result.rows.size(), 0);
    auto sequential = options;
    sequential.executor = {};
    run_tasks(options.executor, result.rows.size(), [&](std::size_t r) {
      const std::vector<Matcher> matchers = compile(nontrivial({result.rows[r].representative}));
      const auto keep = classify(classes, matchers, true, sequential);
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (keep[c]) counts[r] += classes[c].size();
    });
    for (std::size_t r = 0; r < result.rows.size(); ++r) result.rows[r].counts.push_back(counts[r]);
  }

  for (auto& row : result.rows) {
    for (const auto& table : catalog::sequence_tables()) {
      int overlap = 0;
      bool equal = true;
      for (int n = n_first; n <= n_last; ++n) {
        const auto expected = table.at(n);
        if (!expected) continue;
        ++overlap;
        if (*expected < 0 || static_cast<std::uint64_t>(*expected) != row.counts[static_cast<std::size_t>(n - n_first)]) {
          equal = false;
          break;
        }
      }
      if (equal && overlap >= 4) row.sequence_ids.push_back(table.id);
    }
  }
  return result;
}

std::uint64_t sigma_via_class_avoiders(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("sigma needs n >= 1");
  auto with_members = options;
  with_members.members = true;
  const auto result = class_avoiders(catalog::divisor(), Relation(RelationKind::toric), n, with_members);
  std::uint64_t total = 0;
  for (const auto& delta : *result.members) total += static_cast<std::uint64_t>(delta.position_of(1));
  return total;
}

}  // namespace permlab
