#pragma once

// Independent reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "permlab/core.hpp"
#include "permlab/pattern.hpp"
#include "permlab/tableau.hpp"

namespace oracle {

using permlab::BivincularPattern;
using permlab::Letter;
using permlab::Permutation;

// Checks one index tuple (1-based, increasing) against the three occurrence clauses.
inline bool is_occurrence(const BivincularPattern& pat, const Permutation& pi, const std::vector<int>& idx) {
  const int k = pat.length();
  const int n = pi.size();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if ((pat.shape()[static_cast<std::size_t>(a)] < pat.shape()[static_cast<std::size_t>(b)]) !=
          (pi(idx[static_cast<std::size_t>(a)]) < pi(idx[static_cast<std::size_t>(b)])))
        return false;
  std::vector<int> i{0};
  i.insert(i.end(), idx.begin(), idx.end());
  i.push_back(n + 1);
  std::vector<int> j{0};
  for (int t : idx) j.push_back(pi(t));
  std::sort(j.begin() + 1, j.end());
  j.push_back(n + 1);
  for (int x = 0; x <= k; ++x)
    if (pat.positions().contains(x) && i[static_cast<std::size_t>(x) + 1] != i[static_cast<std::size_t>(x)] + 1)
      return false;
  for (int y = 0; y <= k; ++y)
    if (pat.values().contains(y) && j[static_cast<std::size_t>(y) + 1] != j[static_cast<std::size_t>(y)] + 1)
      return false;
  return true;
}

// Filters all C(n, k) index tuples, in lexicographic order.
inline std::vector<std::vector<int>> occurrences(const BivincularPattern& pat, const Permutation& pi) {
  const int k = pat.length();
  const int n = pi.size();
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    if (is_occurrence(pat, pi, idx)) out.push_back(idx);
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t + 1) --t;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u) - 1] + 1;
  }
  return out;
}

inline bool avoids(const BivincularPattern& pat, const Permutation& pi) { return oracle::occurrences(pat, pi).empty(); }

// Closure of w under the elementary Knuth moves, found by breadth-first search.
inline std::set<Permutation> knuth_closure(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    auto word = std::vector<Letter>(cur.begin(), cur.end());
    for (std::size_t i = 0; i + 2 < word.size(); ++i) {
      const Letter a = word[i], b = word[i + 1], c = word[i + 2];
      std::vector<std::vector<Letter>> next;
      if ((c < a && a < b) || (b < a && a < c)) {
        auto v = word;
        std::swap(v[i + 1], v[i + 2]);
        next.push_back(v);
      }
      if ((a < c && c < b) || (b < c && c < a)) {
        auto v = word;
        std::swap(v[i], v[i + 1]);
        next.push_back(v);
      }
      for (auto& v : next) {
        Permutation p(std::move(v));
        if (seen.insert(p).second) queue.push_back(p);
      }
    }
  }
  return seen;
}

// Longest increasing subsequence by quadratic dynamic programming.
inline int lis(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> best(static_cast<std::size_t>(n), 1);
  int out = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b)
      if (pi[static_cast<std::size_t>(b)] < pi[static_cast<std::size_t>(a)])
        best[static_cast<std::size_t>(a)] = std::max(best[static_cast<std::size_t>(a)], best[static_cast<std::size_t>(b)] + 1);
    out = std::max(out, best[static_cast<std::size_t>(a)]);
  }
  return out;
}

// Places 0 on a circle of n + 1 slots, then 1, 2, ..., n, each k slots further on, and reads
// the circle starting after 0. Empty when a slot is hit twice.
inline std::vector<Letter> circle_placement(int k, int n) {
  const int m = n + 1;
  std::vector<int> circle(static_cast<std::size_t>(m), -1);
  circle[0] = 0;
  int pos = 0;
  for (int letter = 1; letter <= n; ++letter) {
    pos = (pos + k) % m;
    if (circle[static_cast<std::size_t>(pos)] != -1) return {};
    circle[static_cast<std::size_t>(pos)] = letter;
  }
  return std::vector<Letter>(circle.begin() + 1, circle.end());
}

inline std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += d;
  return total;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Repeated composition until the identity comes back.
inline std::uint64_t order_by_iteration(const Permutation& pi) {
  const auto id = Permutation::identity(pi.size());
  auto power = pi;
  std::uint64_t m = 1;
  while (power != id) {
    std::vector<Letter> next(power.begin(), power.end());
    for (int i = 1; i <= pi.size(); ++i) next[static_cast<std::size_t>(i - 1)] = pi(power(i));
    power = Permutation(std::move(next));
    ++m;
  }
  return m;
}

}  // namespace oracle
