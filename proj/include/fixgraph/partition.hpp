#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixgraph {

// 1-based (row, column) coordinate of a Young diagram cell.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;  // row-major
};

// Integer partition in canonical form: weakly decreasing positive parts,
// no stored zeros. The empty partition is valid. Instances are immutable.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is already canonical.
  /// Rejecting instead of normalizing surfaces caller bugs early.
  explicit Partition(std::vector<int> parts);

  /// Accepts "2,2,2,1" and the exponent shorthand "2^3,1"; the empty
  /// string denotes the empty partition.
  static Partition parse(std::string_view text);

  int size() const { return size_; }  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }

  /// lambda_i for 1-based i; zero past the last row.
  int part(int i) const;
  /// Conjugate part lambda'_j for 1-based j, without building the conjugate.
  int conjugate_part(int j) const;

  Partition conjugate() const;
  bool contains(const Partition& mu) const;
  bool contains_cell(Cell u) const;

  std::string to_string() const;           // "2,2,2,1"; "" for empty
  std::string to_exponent_string() const;  // "2^3,1"; "" for empty

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical reporting order: descending lexicographic on the part lists,
/// e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
bool canonical_less(const Partition& a, const Partition& b);

// Finite cell set in canonical row-major order; equality and ordering are
// independent of construction order.
class Diagram {
 public:
  Diagram() = default;
  /// Sorts and deduplicates. Throws std::invalid_argument on cells with
  /// row or column < 1.
  explicit Diagram(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(Cell u) const;

  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Cell> cells_;
};

/// The Young diagram [lambda] = {(i,j) : 1 <= i <= l, 1 <= j <= lambda_i}.
Diagram diagram_of(const Partition& lambda);

/// Hook length lambda_i - i + lambda'_j - j + 1 of u = (i,j).
/// Throws std::out_of_range if u lies outside [lambda].
int hook_length(const Partition& lambda, Cell u);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All mu of size m with mu contained in lambda, descending lexicographic.
/// Requires 0 <= m <= |lambda|.
std::vector<Partition> subpartitions_of_size(const Partition& lambda, int m);

}  // namespace fixgraph
