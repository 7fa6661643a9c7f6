#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "permlab/arith.hpp"
#include "permlab/catalog.hpp"
#include "permlab/census.hpp"
#include "permlab/errors.hpp"
#include "permlab/tableau.hpp"
#include "thread_executor.hpp"

namespace permlab::tools {

namespace {

using Json = nlohmann::ordered_json;

struct Range {
  int first = 0;
  int last = 0;
  bool single() const { return first == last; }
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

// "7" or "1..8".
Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text, "degree");
    return {n, n};
  }
  Range r{parse_int(text.substr(0, dots), "degree"), parse_int(text.substr(dots + 2), "degree")};
  if (r.first < 0 || r.last < r.first) throw ParseError("bad degree range '" + std::string(text) + "'");
  return r;
}

std::vector<std::int64_t> parse_values(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(start, comma - start);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad value list '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

// Multi-digit letters in parentheses: 123456789(10).
std::string appendix_word(const Permutation& pi) {
  std::string out;
  for (Letter v : pi) out += v < 10 ? std::to_string(v) : "(" + std::to_string(v) + ")";
  return out;
}

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

enum class Emit { json, csv, text };

Emit parse_emit(const std::string& text) {
  if (text == "json") return Emit::json;
  if (text == "csv") return Emit::csv;
  if (text == "text") return Emit::text;
  throw ParseError("unknown output format '" + text + "'");
}

Json members_json(const std::vector<Permutation>& members) {
  Json out = Json::array();
  for (const auto& pi : members) out.push_back(pi.str());
  return out;
}

Json result_json(const EnumerationResult& r) {
  Json j;
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["relation"] = r.relation ? r.relation->name() : "none";
  Json patterns = Json::array();
  for (const auto& p : r.patterns) patterns.push_back(p.str());
  j["patterns"] = patterns;
  j["count"] = r.count;
  if (r.members) j["members"] = members_json(*r.members);
  return j;
}

Json census_json(const ClassCensus& c, const Relation& relation) {
  Json j;
  j["n"] = c.n;
  j["relation"] = relation.name();
  j["classes"] = c.class_count();
  j["total"] = c.total();
  Json sizes = Json::object();
  for (const auto& [size, count] : c.by_size) sizes[std::to_string(size)] = count;
  j["by_size"] = sizes;
  return j;
}

struct Globals {
  unsigned threads = 0;
  int budget_n = kDefaultBudgetN;
  std::string emit = "json";
};

EnumerationOptions make_options(const Globals& g) {
  EnumerationOptions options;
  options.budget_n = g.budget_n;
  options.executor = make_thread_executor(g.threads);
  return options;
}

int budget_from_environment() {
  const char* env = std::getenv("PERMLAB_BUDGET_N");
  if (env == nullptr || *env == '\0') return kDefaultBudgetN;
  return parse_int(env, "PERMLAB_BUDGET_N");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivincular pattern avoidance under equivalence relations on permutations", "permlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  Globals g;
  g.threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1U, 1024U));
  std::optional<int> budget_flag;
  app.add_option("--budget-n", budget_flag, "Largest degree scanned exhaustively (default 9 or $PERMLAB_BUDGET_N)");

  auto add_emit = [&](CLI::App* sub) {
    sub->add_option("--emit", g.emit, "Output format: json, csv or text")->capture_default_str();
  };

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count permutations by pattern and relation");
  std::string mode_text = "class-avoid";
  std::vector<std::string> pattern_texts;
  std::string relation_text = "none";
  std::string range_text;
  bool want_members = false;
  enumerate_cmd->add_option("--mode", mode_text, "class-avoid, class-match, avoid or match")->capture_default_str();
  enumerate_cmd->add_option("--pattern", pattern_texts, "Pattern, e.g. 231;x=0,1;y=0,1,2 (repeatable)");
  enumerate_cmd->add_option("--relation", relation_text, "conjugacy, order, knuth, toric, descent or none")
      ->capture_default_str();
  enumerate_cmd->add_option("--n", range_text, "Degree N or range A..B")->required();
  enumerate_cmd->add_flag("--members", want_members, "List the members");
  add_emit(enumerate_cmd);

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "Class-size census of a relation");
  bool want_sizes = false;
  classes_cmd->add_option("--relation", relation_text)->required();
  classes_cmd->add_option("--n", range_text, "Degree N or range A..B")->required();
  classes_cmd->add_flag("--sizes", want_sizes, "Print 'size count' lines before the JSON");
  add_emit(classes_cmd);

  // survey
  auto* survey_cmd = app.add_subcommand("survey", "Class-avoider counts for every pattern of a length");
  int length = 3;
  std::string survey_range = "1..6";
  survey_cmd->add_option("--relation", relation_text)->required();
  survey_cmd->add_option("--length", length)->capture_default_str();
  survey_cmd->add_option("--n", survey_range, "Degree range A..B")->capture_default_str();
  add_emit(survey_cmd);

  // stable
  auto* stable_cmd = app.add_subcommand("stable", "Bounded stability check");
  std::string stable_pattern;
  int n_max = 7;
  stable_cmd->add_option("--relation", relation_text)->required();
  stable_cmd->add_option("--pattern", stable_pattern)->required();
  stable_cmd->add_option("--n-max", n_max)->capture_default_str();
  add_emit(stable_cmd);

  // rsk
  auto* rsk_cmd = app.add_subcommand("rsk", "Insertion and recording tableaux");
  std::string perm_text;
  rsk_cmd->add_option("--perm", perm_text)->required();
  std::string rsk_emit = "text";
  rsk_cmd->add_option("--emit", rsk_emit, "json or text")->capture_default_str();

  // natural
  auto* natural_cmd = app.add_subcommand("natural", "Natural and divisor permutations");
  std::string natural_range;
  natural_cmd->add_option("--n", natural_range, "Degree N or range A..B")->required();

  // sigma
  auto* sigma_cmd = app.add_subcommand("sigma", "Divisor sum through divisor permutations");
  std::uint64_t sigma_n = 0;
  std::string via = "divisor-perms";
  sigma_cmd->add_option("--n", sigma_n)->required();
  sigma_cmd->add_option("--via", via, "divisor-perms or avoiders")->capture_default_str();
  std::string sigma_emit = "text";
  sigma_cmd->add_option("--emit", sigma_emit, "json or text")->capture_default_str();

  // robin
  auto* robin_cmd = app.add_subcommand("robin", "Robin inequality over a range");
  std::uint64_t robin_from = 3, robin_to = 3;
  robin_cmd->add_option("--from", robin_from)->required();
  robin_cmd->add_option("--to", robin_to)->required();
  std::string robin_emit = "csv";
  robin_cmd->add_option("--emit", robin_emit, "csv or json")->capture_default_str();

  // seq-check
  auto* seq_cmd = app.add_subcommand("seq-check", "Compare values with an embedded sequence table");
  std::string seq_id, seq_values;
  int seq_first = -1;
  seq_cmd->add_option("--id", seq_id)->required();
  seq_cmd->add_option("--values", seq_values, "Comma-separated values; recomputed when omitted");
  seq_cmd->add_option("--first", seq_first, "Degree of the first value (default: table offset)");
  add_emit(seq_cmd);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    g.budget_n = budget_flag ? *budget_flag : budget_from_environment();
    const auto options = make_options(g);

    if (enumerate_cmd->parsed()) {
      const Mode mode = parse_mode(mode_text);
      std::optional<Relation> relation;
      if (relation_text != "none") relation = Relation::parse(relation_text);
      std::vector<BivincularPattern> patterns;
      for (const auto& t : pattern_texts) patterns.push_back(BivincularPattern::parse(t));
      const Range range = parse_range(range_text);
      const Emit emit = parse_emit(g.emit);
      auto opts = options;
      opts.members = want_members;
      check_budget(range.last, opts);
      std::vector<EnumerationResult> results;
      for (int n = range.first; n <= range.last; ++n) results.push_back(enumerate(mode, patterns, relation, n, opts));
      if (emit == Emit::json) {
        if (range.single()) {
          out << result_json(results.front()).dump() << '\n';
        } else {
          Json all = Json::array();
          for (const auto& r : results) all.push_back(result_json(r));
          out << all.dump() << '\n';
        }
      } else if (emit == Emit::csv) {
        out << "n,count\n";
        for (const auto& r : results) out << r.n << ',' << r.count << '\n';
      } else {
        for (const auto& r : results) {
          out << "n=" << r.n << " count=" << r.count << '\n';
          if (r.members)
            for (const auto& pi : *r.members) out << pi.str() << '\n';
        }
      }
      return kExitOk;
    }

    if (classes_cmd->parsed()) {
      const auto relation = Relation::parse(relation_text);
      const Range range = parse_range(range_text);
      const Emit emit = parse_emit(g.emit);
      check_budget(range.last, options);
      std::vector<ClassCensus> censuses;
      for (int n = range.first; n <= range.last; ++n) censuses.push_back(census(relation, n, options));
      if (want_sizes) {
        for (const auto& c : censuses)
          for (const auto& [size, count] : c.by_size) out << size << ' ' << count << '\n';
      }
      if (emit == Emit::csv) {
        out << "n,count\n";
        for (const auto& c : censuses) out << c.n << ',' << c.class_count() << '\n';
      } else if (range.single()) {
        out << census_json(censuses.front(), relation).dump() << '\n';
      } else {
        Json all = Json::array();
        for (const auto& c : censuses) all.push_back(census_json(c, relation));
        out << all.dump() << '\n';
      }
      return kExitOk;
    }

    if (survey_cmd->parsed()) {
      const auto relation = Relation::parse(relation_text);
      const Range range = parse_range(survey_range);
      const Emit emit = parse_emit(g.emit);
      const auto s = survey(relation, length, range.first, range.last, options);
      if (emit == Emit::json) {
        Json j;
        j["relation"] = relation.name();
        j["length"] = s.length;
        j["n_first"] = s.n_first;
        j["n_last"] = s.n_last;
        j["total_patterns"] = s.total_patterns;
        j["representatives"] = s.rows.size();
        j["shift_merged_classes"] = s.shift_merged_classes;
        Json rows = Json::array();
        for (const auto& row : s.rows) {
          Json r;
          r["pattern"] = row.representative.str();
          r["orbit_size"] = row.orbit_size;
          r["counts"] = row.counts;
          r["sequences"] = row.sequence_ids;
          r["shift_class"] = row.shift_class;
          rows.push_back(r);
        }
        j["rows"] = rows;
        out << j.dump() << '\n';
      } else if (emit == Emit::csv) {
        out << "pattern,orbit_size";
        for (int n = s.n_first; n <= s.n_last; ++n) out << ",n" << n;
        out << ",sequences\n";
        for (const auto& row : s.rows) {
          out << '"' << row.representative.str() << "\"," << row.orbit_size;
          for (auto c : row.counts) out << ',' << c;
          std::string ids;
          for (const auto& id : row.sequence_ids) ids += (ids.empty() ? "" : " ") + id;
          out << ',' << ids << '\n';
        }
      } else {
        out << s.total_patterns << " patterns, " << s.rows.size() << " representatives, "
            << s.shift_merged_classes << " shift-merged classes\n";
        for (const auto& row : s.rows) {
          out << row.representative.str() << " x" << row.orbit_size << ':';
          for (auto c : row.counts) out << ' ' << c;
          for (const auto& id : row.sequence_ids) out << " [" << id << ']';
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (stable_cmd->parsed()) {
      const auto relation = Relation::parse(relation_text);
      const auto pattern = BivincularPattern::parse(stable_pattern);
      const Emit emit = parse_emit(g.emit);
      const auto report = is_stable(pattern, relation, n_max, options);
      if (emit == Emit::json) {
        Json j;
        j["relation"] = relation.name();
        j["pattern"] = pattern.str();
        j["n_max"] = n_max;
        j["stable"] = report.stable;
        Json cls = Json::array();
        for (const auto& p : report.pattern_class) cls.push_back(p.str());
        j["pattern_class"] = cls;
        if (report.witness) {
          j["witness"] = {{"n", report.witness->n},
                          {"permutation", report.witness->permutation.str()},
                          {"in_class_avoiders", report.witness->in_class_avoiders}};
        }
        out << j.dump() << '\n';
      } else {
        out << (report.stable ? "stable" : "not stable") << " up to n=" << n_max << '\n';
        if (report.witness) {
          out << "witness n=" << report.witness->n << ' ' << report.witness->permutation.str()
              << (report.witness->in_class_avoiders ? " (class avoider matching the pattern class)"
                                                    : " (avoids the pattern class, class does not)")
              << '\n';
        }
      }
      return kExitOk;
    }

    if (rsk_cmd->parsed()) {
      const auto pi = Permutation::parse(perm_text);
      const auto [p, q] = rsk(pi);
      if (rsk_emit == "json") {
        out << Json{{"perm", pi.str()}, {"P", p.rows()}, {"Q", q.rows()}}.dump() << '\n';
      } else if (rsk_emit == "text") {
        out << p.str() << '\n' << q.str();
      } else {
        throw ParseError("unknown output format '" + rsk_emit + "'");
      }
      return kExitOk;
    }

    if (natural_cmd->parsed()) {
      const Range range = parse_range(natural_range);
      if (range.first < 1) throw std::invalid_argument("natural needs n >= 1");
      for (int n = range.first; n <= range.last; ++n) {
        if (!range.single()) out << (n == range.first ? "" : "\n") << "S_" << n << '\n';
        for (const auto& nu : natural_perms(n)) {
          out << "nu_{" << nu.k << ',' << n << "} = " << appendix_word(nu.perm);
          if (nu.is_divisor()) out << " = delta_{" << nu.k << '|' << n << '}';
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (sigma_cmd->parsed()) {
      const std::uint64_t expected = sigma(sigma_n);
      std::uint64_t value = 0;
      if (via == "divisor-perms") {
        value = sigma_via_divisor_perms(sigma_n);
      } else if (via == "avoiders") {
        value = sigma_via_class_avoiders(static_cast<int>(sigma_n), options);
      } else {
        throw ParseError("unknown sigma path '" + via + "'");
      }
      if (value != expected) {
        throw InternalError("sigma(" + std::to_string(sigma_n) + ") via " + via + " gave " + std::to_string(value) +
                            ", expected " + std::to_string(expected));
      }
      if (sigma_emit == "json") {
        out << Json{{"n", sigma_n}, {"via", via}, {"sigma", value}}.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return kExitOk;
    }

    if (robin_cmd->parsed()) {
      if (robin_to < robin_from) throw std::invalid_argument("robin needs --from <= --to");
      const std::size_t count = robin_to - robin_from + 1;
      std::vector<RobinReport> reports(count);
      constexpr std::size_t kBlock = 1024;
      run_tasks(options.executor, (count + kBlock - 1) / kBlock, [&](std::size_t block) {
        for (std::size_t i = block * kBlock; i < std::min(count, (block + 1) * kBlock); ++i)
          reports[i] = robin_check(robin_from + i);
      });
      if (robin_emit == "csv") {
        out << "n,sigma,bound,holds,inconclusive\n";
        for (const auto& r : reports)
          out << r.n << ',' << r.sigma << ',' << fixed(r.bound, 6) << ',' << (r.holds ? "true" : "false") << ','
              << (r.inconclusive ? "true" : "false") << '\n';
      } else if (robin_emit == "json") {
        Json all = Json::array();
        for (const auto& r : reports)
          all.push_back({{"n", r.n}, {"sigma", r.sigma}, {"bound", r.bound}, {"holds", r.holds},
                         {"inconclusive", r.inconclusive}});
        out << all.dump() << '\n';
      } else {
        throw ParseError("unknown output format '" + robin_emit + "'");
      }
      return kExitOk;
    }

    if (seq_cmd->parsed()) {
      const auto& table = catalog::sequence_table(seq_id);
      const Emit emit = parse_emit(g.emit);
      const auto report = seq_values.empty()
                              ? catalog::sequence_check(seq_id, options)
                              : catalog::sequence_check(seq_id, parse_values(seq_values),
                                                        seq_first < 0 ? table.offset : seq_first);
      if (emit == Emit::json) {
        Json entries = Json::array();
        for (const auto& e : report.entries) {
          Json item;
          item["n"] = e.n;
          item["expected"] = e.expected ? Json(*e.expected) : Json(nullptr);
          item["actual"] = e.actual;
          item["equal"] = e.equal();
          entries.push_back(item);
        }
        out << Json{{"id", report.id}, {"ok", report.ok()}, {"entries", entries}}.dump() << '\n';
      } else if (emit == Emit::csv) {
        out << "n,expected,actual,equal\n";
        for (const auto& e : report.entries)
          out << e.n << ',' << (e.expected ? std::to_string(*e.expected) : "") << ',' << e.actual << ','
              << (e.equal() ? "true" : "false") << '\n';
      } else {
        out << report.id << (report.ok() ? " ok" : " MISMATCH") << '\n';
        for (const auto& e : report.entries)
          out << "n=" << e.n << " expected=" << (e.expected ? std::to_string(*e.expected) : "-")
              << " actual=" << e.actual << (e.equal() ? "" : " <--") << '\n';
      }
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "permlab: " << e.what() << " (raise with --budget-n or PERMLAB_BUDGET_N)\n";
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "permlab: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "permlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "permlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Cancelled& e) {
    err << "permlab: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace permlab::tools
