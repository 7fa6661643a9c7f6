#include "permlab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permlab {

int Shape::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Shape::is_partition() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Shape YoungTableau::shape() const {
  Shape s;
  for (const auto& row : rows_) s.parts.push_back(static_cast<int>(row.size()));
  return s;
}

int YoungTableau::size() const { return shape().size(); }

bool YoungTableau::is_standard() const {
  if (!shape().is_partition()) return false;
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && rows_[r][c - 1] >= v) return false;
      if (r > 0 && rows_[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::vector<int> YoungTableau::row_insert(int value) {
  std::vector<int> bumped;
  for (auto& row : rows_) {
    auto slot = std::upper_bound(row.begin(), row.end(), value);
    if (slot == row.end()) {
      row.push_back(value);
      return bumped;
    }
    std::swap(*slot, value);
    bumped.push_back(value);
  }
  rows_.push_back({value});
  return bumped;
}

std::string YoungTableau::str() const {
  std::string out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out.push_back(' ');
      out += std::to_string(row[c]);
    }
    out.push_back('\n');
  }
  return out;
}

RskPair rsk(const Permutation& pi) {
  RskPair out;
  std::vector<std::vector<int>> recording;
  for (int i = 1; i <= pi.size(); ++i) {
    const auto row = out.insertion.row_insert(pi(i)).size();
    if (row == recording.size()) recording.emplace_back();
    recording[row].push_back(i);
  }
  out.recording = YoungTableau(std::move(recording));
  return out;
}

YoungTableau insertion_tableau(std::span<const Letter> word) {
  YoungTableau t;
  for (Letter v : word) t.row_insert(v);
  return t;
}

Permutation inverse_rsk(const YoungTableau& insertion, const YoungTableau& recording) {
  if (insertion.shape() != recording.shape()) throw std::invalid_argument("inverse_rsk: shape mismatch");
  if (!insertion.is_standard() || !recording.is_standard()) {
    throw std::invalid_argument("inverse_rsk: tableaux must be standard");
  }
  auto p = insertion.rows();
  auto q = recording.rows();
  const int n = insertion.size();
  std::vector<Letter> word(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    // The box holding `step` in Q is where insertion `step` ended.
    std::size_t row = 0;
    while (q[row].empty() || q[row].back() != step) ++row;
    q[row].pop_back();
    int value = p[row].back();
    p[row].pop_back();
    for (std::size_t r = row; r-- > 0;) {
      // Reverse bump: the largest entry below `value` in row r is displaced upward.
      auto slot = std::lower_bound(p[r].begin(), p[r].end(), value);
      --slot;
      std::swap(*slot, value);
    }
    if (p[row].empty()) {
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(row));
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
    }
    word[static_cast<std::size_t>(step - 1)] = value;
  }
  return Permutation::from_trusted(std::move(word));
}

std::vector<std::vector<Letter>> knuth_neighbors(std::span<const Letter> word) {
  std::vector<std::vector<Letter>> out;
  for (std::size_t i = 0; i + 2 < word.size(); ++i) {
    const Letter a = word[i], b = word[i + 1], c = word[i + 2];
    // K1: yzx <-> yxz when x < y <= z, swapping the last two letters.
    const bool k1 = (c < a && a <= b) || (b < a && a <= c);
    // K2: xzy <-> zxy when x <= y < z, swapping the first two letters.
    const bool k2 = (a <= c && c < b) || (b <= c && c < a);
    if (k1) {
      std::vector<Letter> next(word.begin(), word.end());
      std::swap(next[i + 1], next[i + 2]);
      out.push_back(std::move(next));
    }
    if (k2) {
      std::vector<Letter> next(word.begin(), word.end());
      std::swap(next[i], next[i + 1]);
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> knuth_neighbors(const Permutation& pi) {
  std::vector<Permutation> out;
  for (auto& w : knuth_neighbors(pi.word())) out.push_back(Permutation::from_trusted(std::move(w)));
  return out;
}

bool is_hook(const Shape& shape) {
  for (std::size_t i = 1; i < shape.parts.size(); ++i)
    if (shape.parts[i] != 1) return false;
  return true;
}

std::uint64_t count_syt(const Shape& shape) {
  if (!shape.is_partition()) throw std::invalid_argument("count_syt: not a partition");
  const int n = shape.size();
  std::vector<int> hooks;
  for (std::size_t r = 0; r < shape.parts.size(); ++r) {
    for (int c = 0; c < shape.parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < shape.parts.size() && shape.parts[rr] > c; ++rr) ++below;
      hooks.push_back(shape.parts[r] - c - 1 + below + 1);
    }
  }
  // Divide as we go so intermediates stay within n!.
  std::uint64_t result = 1;
  std::vector<int> pending = hooks;
  for (int f = 2; f <= n; ++f) {
    result *= static_cast<std::uint64_t>(f);
    for (auto& h : pending) {
      if (h > 1 && result % static_cast<std::uint64_t>(h) == 0) {
        result /= static_cast<std::uint64_t>(h);
        h = 1;
      }
    }
  }
  for (int h : pending)
    if (h > 1) result /= static_cast<std::uint64_t>(h);
  return result;
}

namespace {

void fill_tableaux(std::vector<std::vector<int>>& rows, const Shape& shape, int next, int n,
                   std::vector<YoungTableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.parts.size(); ++r) {
    const auto len = rows[r].size();
    if (static_cast<int>(len) == shape.parts[r]) continue;
    if (r > 0 && rows[r - 1].size() <= len) continue;
    rows[r].push_back(next);
    fill_tableaux(rows, shape, next + 1, n, out);
    rows[r].pop_back();
  }
}

void build_partitions(int remaining, int cap, std::vector<int>& parts, std::vector<Shape>& out) {
  if (remaining == 0) {
    out.push_back(Shape{parts});
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    parts.push_back(p);
    build_partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<YoungTableau> standard_tableaux(const Shape& shape) {
  if (!shape.is_partition()) throw std::invalid_argument("standard_tableaux: not a partition");
  std::vector<YoungTableau> out;
  std::vector<std::vector<int>> rows(shape.parts.size());
  fill_tableaux(rows, shape, 1, shape.size(), out);
  std::sort(out.begin(), out.end());
  return out;
}

YoungTableau row_reading_tableau(const Shape& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts) {
    rows.emplace_back(static_cast<std::size_t>(len));
    for (auto& v : rows.back()) v = next++;
  }
  return YoungTableau(std::move(rows));
}

std::vector<Shape> partitions(int n) {
  std::vector<Shape> out;
  std::vector<int> parts;
  build_partitions(n, n, parts, out);
  return out;
}

}  // namespace permlab
