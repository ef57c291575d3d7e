#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crsym/rational.hpp"

namespace crsym {

using RatVector = std::vector<Rational>;

/// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector multiply(const RatVector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse rational matrix stored as a list of rows of (column, value) pairs.
class SparseRatMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  explicit SparseRatMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Row>& row_data() const { return rows_; }

  /// Appends a row; zero entries are dropped, columns must be distinct.
  void add_row(Row row);

  RatVector multiply(const RatVector& v) const;
  RatMatrix to_dense() const;

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Exact basis of the right null space.
///
/// Computed by fraction-free (Bareiss) elimination. The basis is the one read
/// off the reduced row echelon form: one vector per free column, in increasing
/// free-column order, scaled to a primitive integer vector whose first nonzero
/// entry is positive. The result is therefore independent of the elimination
/// path and stable across runs.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Same basis for a sparse matrix. Columns are first grouped into connected
/// blocks (columns sharing a row); each block is eliminated on its own.
std::vector<RatVector> kernel_basis(const SparseRatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Scales v to a primitive integer vector with positive leading entry.
RatVector normalize_integer(RatVector v);

}  // namespace crsym
