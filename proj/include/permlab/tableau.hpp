#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permlab/core.hpp"

namespace permlab {

/// Integer partition, parts weakly decreasing and positive.
struct Shape {
  std::vector<int> parts;

  int size() const;
  bool is_partition() const;
  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape& a, const Shape& b) { return a.parts <=> b.parts; }
};

/// Young tableau as ragged rows, top row first.
class YoungTableau {
 public:
  YoungTableau() = default;
  explicit YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Shape shape() const;
  int size() const;

  /// Rows and columns strictly increase, and the entries are exactly 1..size().
  bool is_standard() const;

  /// Row-inserts `value` (Schensted bumping). Returns the letters bumped, in order: entry i is
  /// the letter bumped out of row i into row i + 1. The new box ends up in row
  /// `bumped.size()`.
  std::vector<int> row_insert(int value);

  /// Rows on separate lines, entries separated by spaces.
  std::string str() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  friend auto operator<=>(const YoungTableau& a, const YoungTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

struct RskPair {
  YoungTableau insertion;  // P
  YoungTableau recording;  // Q
};

/// Row-insertion RSK.
RskPair rsk(const Permutation& pi);
YoungTableau insertion_tableau(std::span<const Letter> word);

/// Inverts rsk. Throws std::invalid_argument on a shape mismatch or a nonstandard tableau.
Permutation inverse_rsk(const YoungTableau& insertion, const YoungTableau& recording);

/// Words one elementary Knuth move away (K1, K2 and their inverses on three adjacent letters),
/// sorted and deduplicated.
std::vector<std::vector<Letter>> knuth_neighbors(std::span<const Letter> word);
std::vector<Permutation> knuth_neighbors(const Permutation& pi);

bool is_hook(const Shape& shape);

/// Number of standard Young tableaux of the shape (hook-length formula). Exact for |shape| <= 20.
std::uint64_t count_syt(const Shape& shape);

/// All standard tableaux of the shape, sorted.
std::vector<YoungTableau> standard_tableaux(const Shape& shape);

/// The tableau filled row by row, left to right: 1..a in the first row and so on.
YoungTableau row_reading_tableau(const Shape& shape);

/// Partitions of n in decreasing lexicographic order.
std::vector<Shape> partitions(int n);

}  // namespace permlab
