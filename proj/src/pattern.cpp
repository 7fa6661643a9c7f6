#include "permlab/pattern.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

#include "permlab/errors.hpp"

namespace permlab {

// IndexSet

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int m : members) insert(m);
}

IndexSet IndexSet::range(int first, int last) {
  IndexSet s;
  for (int m = first; m <= last; ++m) s.insert(m);
  return s;
}

void IndexSet::insert(int m) {
  if (m < 0 || m >= 63) throw std::invalid_argument("index set member out of range");
  bits_ |= std::uint64_t{1} << m;
}

int IndexSet::max() const noexcept { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int m = 0; m < 64; ++m)
    if (contains(m)) out.push_back(m);
  return out;
}

IndexSet IndexSet::reflected(int k) const {
  IndexSet out;
  for (int m : members()) out.insert(k - m);
  return out;
}

IndexSet IndexSet::rotated(int delta, int modulus) const {
  IndexSet out;
  for (int m : members()) out.insert(((m + delta) % modulus + modulus) % modulus);
  return out;
}

// BivincularPattern

BivincularPattern::BivincularPattern(Permutation shape, IndexSet positions, IndexSet values)
    : shape_(std::move(shape)), positions_(positions), values_(values) {
  if (positions_.max() > length() || values_.max() > length()) {
    throw std::invalid_argument("pattern adjacency sets must lie in {0.." + std::to_string(length()) + "}");
  }
}

namespace {

IndexSet parse_index_list(std::string_view text, std::string_view whole) {
  IndexSet set;
  if (text.empty()) return set;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    auto token = text.substr(start, stop - start);
    int value = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0 ||
        value >= 63) {
      throw ParseError("bad index list in pattern '" + std::string(whole) + "'");
    }
    set.insert(value);
    start = stop + 1;
  }
  return set;
}

std::string join(const IndexSet& set) {
  std::string out;
  for (int m : set.members()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(m);
  }
  return out;
}

}  // namespace

BivincularPattern BivincularPattern::parse(std::string_view text) {
  std::vector<std::string_view> clauses;
  std::size_t start = 0;
  while (true) {
    auto stop = text.find(';', start);
    clauses.push_back(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  auto shape = Permutation::parse(clauses.front());
  IndexSet x, y;
  bool seen_x = false, seen_y = false;
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    auto clause = clauses[i];
    if (clause.size() < 2 || clause[1] != '=') throw ParseError("bad pattern clause in '" + std::string(text) + "'");
    auto body = clause.substr(2);
    if (clause[0] == 'x' && !seen_x) {
      x = parse_index_list(body, text);
      seen_x = true;
    } else if (clause[0] == 'y' && !seen_y) {
      y = parse_index_list(body, text);
      seen_y = true;
    } else {
      throw ParseError("bad pattern clause in '" + std::string(text) + "'");
    }
  }
  if (x.max() > shape.size() || y.max() > shape.size()) {
    throw ParseError("adjacency index beyond pattern length in '" + std::string(text) + "'");
  }
  return BivincularPattern(std::move(shape), x, y);
}

std::string BivincularPattern::str() const {
  return shape_.str() + ";x=" + join(positions_) + ";y=" + join(values_);
}

// Occurrence engine

std::vector<Letter> occurrence_values(const Occurrence& occ, const Permutation& pi) {
  std::vector<Letter> out;
  out.reserve(occ.positions.size());
  for (int i : occ.positions) out.push_back(pi(i));
  return out;
}

Matcher::Matcher(BivincularPattern pattern) : pattern_(std::move(pattern)) {
  const int k = pattern_.length();
  rank_at_.assign(pattern_.shape().begin(), pattern_.shape().end());
  index_of_rank_.assign(static_cast<std::size_t>(k) + 2, -1);
  for (int t = 0; t < k; ++t) index_of_rank_[static_cast<std::size_t>(rank_at_[static_cast<std::size_t>(t)])] = t;
}

template <class Visit>
bool Matcher::search(std::span<const Letter> host, std::span<const int> where, Visit& visit) const {
  const int n = static_cast<int>(host.size());
  const int k = pattern_.length();
  const IndexSet& X = pattern_.positions();
  const IndexSet& Y = pattern_.values();

  if (k == 0) {
    // Only the boundary conventions remain: i_1 = i_0 + 1 reads n + 1 = 1.
    if ((X.contains(0) || Y.contains(0)) && n != 0) return true;
    return visit(std::span<const int>{});
  }
  if (k > n) return true;

  std::array<int, 64> pos{};
  std::array<int, 64> val{};

  // Backtracking over pattern indices. Returns false when the visitor asked to stop.
  auto place = [&](auto&& self, int t) -> bool {
    if (t == k) return visit(std::span<const int>(pos.data(), static_cast<std::size_t>(k)));
    const int r = rank_at_[static_cast<std::size_t>(t)];

    const int lo_pos = t == 0 ? 1 : pos[static_cast<std::size_t>(t - 1)] + 1;
    const int hi_pos = n - (k - 1 - t);
    if (lo_pos > hi_pos) return true;

    int forced_pos = 0;
    auto force_pos = [&](int p) {
      if (forced_pos != 0 && forced_pos != p) return false;
      forced_pos = p;
      return true;
    };
    if (t == 0 && X.contains(0) && !force_pos(1)) return true;
    if (t >= 1 && X.contains(t) && !force_pos(pos[static_cast<std::size_t>(t - 1)] + 1)) return true;
    if (t == k - 1 && X.contains(k) && !force_pos(n)) return true;

    int lo_val = 0;
    int hi_val = n + 1;
    for (int s = 0; s < t; ++s) {
      const int v = val[static_cast<std::size_t>(s)];
      if (rank_at_[static_cast<std::size_t>(s)] < r) {
        lo_val = std::max(lo_val, v);
      } else {
        hi_val = std::min(hi_val, v);
      }
    }

    int forced_val = 0;
    auto force_val = [&](int v) {
      if (forced_val != 0 && forced_val != v) return false;
      forced_val = v;
      return true;
    };
    if (Y.contains(r - 1)) {
      if (r == 1) {
        if (!force_val(1)) return true;
      } else if (int s = index_of_rank_[static_cast<std::size_t>(r - 1)]; s < t) {
        if (!force_val(val[static_cast<std::size_t>(s)] + 1)) return true;
      }
    }
    if (Y.contains(r)) {
      if (r == k) {
        if (!force_val(n)) return true;
      } else if (int s = index_of_rank_[static_cast<std::size_t>(r + 1)]; s < t) {
        if (!force_val(val[static_cast<std::size_t>(s)] - 1)) return true;
      }
    }

    auto try_at = [&](int p, int v) -> bool {
      pos[static_cast<std::size_t>(t)] = p;
      val[static_cast<std::size_t>(t)] = v;
      return self(self, t + 1);
    };

    if (forced_val != 0) {
      if (forced_val <= lo_val || forced_val >= hi_val) return true;
      const int p = where[static_cast<std::size_t>(forced_val)];
      if (p < lo_pos || p > hi_pos || (forced_pos != 0 && p != forced_pos)) return true;
      return try_at(p, forced_val);
    }
    if (forced_pos != 0) {
      if (forced_pos < lo_pos || forced_pos > hi_pos) return true;
      const int v = host[static_cast<std::size_t>(forced_pos - 1)];
      if (v <= lo_val || v >= hi_val) return true;
      return try_at(forced_pos, v);
    }
    for (int p = lo_pos; p <= hi_pos; ++p) {
      const int v = host[static_cast<std::size_t>(p - 1)];
      if (v <= lo_val || v >= hi_val) continue;
      if (!try_at(p, v)) return false;
    }
    return true;
  };
  return place(place, 0);
}

namespace {

// Position lookup for forced values; only built when the pattern has value constraints.
std::vector<int> positions_by_value(std::span<const Letter> host, bool needed) {
  std::vector<int> where;
  if (!needed) return where;
  where.assign(host.size() + 2, 0);
  for (std::size_t i = 0; i < host.size(); ++i) where[static_cast<std::size_t>(host[i])] = static_cast<int>(i + 1);
  return where;
}

}  // namespace

void Matcher::for_each(std::span<const Letter> host,
                       const std::function<bool(std::span<const int>)>& visit) const {
  auto where = positions_by_value(host, !pattern_.values().empty());
  auto callback = [&](std::span<const int> positions) { return visit(positions); };
  search(host, where, callback);
}

bool Matcher::matches(std::span<const Letter> host) const {
  auto where = positions_by_value(host, !pattern_.values().empty());
  bool found = false;
  auto callback = [&](std::span<const int>) {
    found = true;
    return false;
  };
  search(host, where, callback);
  return found;
}

std::vector<Occurrence> occurrences(const BivincularPattern& pattern, const Permutation& pi) {
  std::vector<Occurrence> out;
  Matcher(pattern).for_each(pi.word(), [&](std::span<const int> positions) {
    out.push_back(Occurrence{std::vector<int>(positions.begin(), positions.end())});
    return true;
  });
  return out;
}

bool matches(const BivincularPattern& pattern, const Permutation& pi) {
  return Matcher(pattern).matches(pi.word());
}

bool avoids(const BivincularPattern& pattern, const Permutation& pi) { return !matches(pattern, pi); }

std::vector<Occurrence> minimal_occurrences(const BivincularPattern& pattern, const Permutation& pi) {
  auto all = occurrences(pattern, pi);
  if (all.empty()) throw NoOccurrence(pi.str() + " avoids " + pattern.str());
  int least = all.front().area();
  for (const auto& occ : all) least = std::min(least, occ.area());
  std::erase_if(all, [least](const Occurrence& occ) { return occ.area() != least; });
  return all;
}

// Symmetries

BivincularPattern reverse(const BivincularPattern& pattern) {
  const int k = pattern.length();
  return BivincularPattern(reverse(pattern.shape()), pattern.positions().reflected(k), pattern.values());
}

BivincularPattern complement(const BivincularPattern& pattern) {
  const int k = pattern.length();
  return BivincularPattern(complement(pattern.shape()), pattern.positions(), pattern.values().reflected(k));
}

BivincularPattern inverse(const BivincularPattern& pattern) {
  return BivincularPattern(inverse(pattern.shape()), pattern.values(), pattern.positions());
}

BivincularPattern shift(const BivincularPattern& pattern) {
  const int k = pattern.length();
  if (k == 0) return pattern;
  const int top_at = pattern.shape().position_of(k);
  return BivincularPattern(oplus(pattern.shape(), 1), pattern.positions().rotated(-top_at, k + 1),
                           pattern.values().rotated(1, k + 1));
}

std::vector<BivincularPattern> all_patterns(int k) {
  std::vector<BivincularPattern> out;
  const std::uint64_t subsets = std::uint64_t{1} << (k + 1);
  for (const auto& shape : all_permutations(k)) {
    for (std::uint64_t x = 0; x < subsets; ++x) {
      for (std::uint64_t y = 0; y < subsets; ++y) {
        out.emplace_back(shape, IndexSet::from_bits(x), IndexSet::from_bits(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const SymmetryWord& word) {
  if (word.empty()) return "id";
  std::string out;
  for (auto s : word) out.push_back(s == Symmetry::reverse ? 'r' : s == Symmetry::complement ? 'c' : 'i');
  return out;
}

Permutation apply(const SymmetryWord& word, const Permutation& pi) {
  Permutation out = pi;
  for (auto s : word) {
    switch (s) {
      case Symmetry::reverse: out = reverse(out); break;
      case Symmetry::complement: out = complement(out); break;
      case Symmetry::inverse: out = inverse(out); break;
    }
  }
  return out;
}

BivincularPattern apply(const SymmetryWord& word, const BivincularPattern& pattern) {
  BivincularPattern out = pattern;
  for (auto s : word) {
    switch (s) {
      case Symmetry::reverse: out = reverse(out); break;
      case Symmetry::complement: out = complement(out); break;
      case Symmetry::inverse: out = inverse(out); break;
    }
  }
  return out;
}

std::vector<SymmetryWord> symmetry_closure(const std::vector<SymmetryWord>& generators) {
  // Elements are told apart by their action on S_4, which the dihedral group acts on faithfully.
  const auto probes = all_permutations(4);
  auto signature = [&](const SymmetryWord& word) {
    std::vector<Permutation> images;
    images.reserve(probes.size());
    for (const auto& pi : probes) images.push_back(apply(word, pi));
    return images;
  };
  std::vector<SymmetryWord> elements{SymmetryWord{}};
  std::set<std::vector<Permutation>> seen{signature(SymmetryWord{})};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      SymmetryWord next = elements[head];
      next.insert(next.end(), g.begin(), g.end());
      if (seen.insert(signature(next)).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace permlab
