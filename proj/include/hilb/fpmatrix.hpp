#pragma once

#include <cstdint>
#include <vector>

#include "hilb/fp.hpp"

namespace hilb::fp {

using Row = std::vector<std::uint64_t>;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  explicit Matrix(std::vector<Row> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  void append_row(const Row& r);

  /// Destructive row echelon; returns the pivot columns.
  std::vector<std::size_t> echelon(const Field& F);

  std::size_t rank(const Field& F) const;

  /// Basis of the right kernel, one vector per non-pivot column.
  std::vector<Row> kernel(const Field& F) const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

std::size_t rank_of_rows(const std::vector<Row>& rows, std::size_t cols,
                         const Field& F);

/// Reduces a spanning set to a linearly independent subset.
std::vector<Row> row_basis(const std::vector<Row>& rows, std::size_t cols,
                           const Field& F);

}  // namespace hilb::fp
