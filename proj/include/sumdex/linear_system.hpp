#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sumdex {

// Homogeneous linear system over Q kept in reduced echelon form by fraction-free
// integer elimination. Every stored row is primitive (gcd of entries 1) with a
// positive pivot entry, and each pivot column is zero in every other row. Under
// that normalization the linear form expressing a variable in terms of the free
// variables is unique, so "x_i - x_j vanishes on the solution space" is a plain
// comparison of forms.
//
// Entries are int64 with 128-bit intermediates; std::overflow_error is thrown if a
// normalized entry leaves int64 range.
class IncrementalSystem {
 public:
  IncrementalSystem() = default;
  explicit IncrementalSystem(std::size_t columns);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  // Adds the equation sum_j row[j] x_j = 0. Returns true when the rank grew.
  bool add(std::span<const std::int64_t> row);

  bool is_pivot(std::size_t column) const noexcept { return row_of_[column] >= 0; }
  // Row holding `column` as pivot. Only valid when is_pivot(column).
  std::span<const std::int64_t> pivot_row(std::size_t column) const;

  // True when some two of `vars` are identically equal on the solution space.
  bool has_equal_pair(std::span<const std::size_t> vars) const;

  // True when x_a - x_b vanishes on the solution space.
  bool forced_equal(std::size_t a, std::size_t b) const;

 private:
  std::uint64_t fingerprint(std::size_t var) const;

  std::size_t columns_ = 0;
  std::vector<std::int64_t> rows_;  // rank() x columns_, row-major
  std::vector<std::size_t> pivots_;
  std::vector<int> row_of_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace sumdex
