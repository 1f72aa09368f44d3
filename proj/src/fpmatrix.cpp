#include "hilb/fpmatrix.hpp"

#include <stdexcept>

namespace hilb::fp {

Matrix::Matrix(std::vector<Row> rows) : rows_(rows.size()), cols_(0) {
  if (!rows.empty()) cols_ = rows.front().size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

void Matrix::append_row(const Row& r) {
  if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged row");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

std::vector<std::size_t> Matrix::echelon(const Field& F) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && at(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    const std::uint64_t inv = F.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint64_t f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank(const Field& F) const {
  Matrix m = *this;
  // Forward elimination only; cheaper than full reduction.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    std::size_t p = rank;
    while (p < m.rows_ && m.at(p, c) == 0) ++p;
    if (p == m.rows_) continue;
    if (p != rank)
      for (std::size_t j = c; j < m.cols_; ++j)
        std::swap(m.at(p, j), m.at(rank, j));
    const std::uint64_t inv = F.inv(m.at(rank, c));
    for (std::size_t i = rank + 1; i < m.rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      const std::uint64_t f = F.mul(m.at(i, c), inv);
      m.at(i, c) = 0;
      for (std::size_t j = c + 1; j < m.cols_; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::vector<Row> Matrix::kernel(const Field& F) const {
  Matrix m = *this;
  std::vector<std::size_t> pivots = m.echelon(F);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Row v(cols_, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F.neg(m.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of_rows(const std::vector<Row>& rows, std::size_t cols,
                         const Field& F) {
  if (rows.empty()) return 0;
  (void)cols;
  return Matrix(rows).rank(F);
}

std::vector<Row> row_basis(const std::vector<Row>& rows, std::size_t cols,
                           const Field& F) {
  std::vector<Row> basis;
  // Incremental elimination, keeping originals whose reduction is nonzero.
  std::vector<Row> reduced;        // echelon rows
  std::vector<std::size_t> lead;   // their pivot columns
  for (const auto& orig : rows) {
    Row v = orig;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (v[lead[k]] == 0) continue;
      const std::uint64_t f = v[lead[k]];
      for (std::size_t j = 0; j < cols; ++j)
        v[j] = F.sub(v[j], F.mul(f, reduced[k][j]));
    }
    std::size_t c = 0;
    while (c < cols && v[c] == 0) ++c;
    if (c == cols) continue;
    const std::uint64_t inv = F.inv(v[c]);
    for (std::size_t j = c; j < cols; ++j) v[j] = F.mul(v[j], inv);
    reduced.push_back(std::move(v));
    lead.push_back(c);
    basis.push_back(orig);
  }
  return basis;
}

}  // namespace hilb::fp
