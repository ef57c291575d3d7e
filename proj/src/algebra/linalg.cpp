#include "crsym/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "crsym/errors.hpp"

namespace crsym {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("RatMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::multiply(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionError("RatMatrix::multiply: size mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

void SparseRatMatrix::add_row(Row row) {
  std::erase_if(row, [](const Entry& e) { return e.second.is_zero(); });
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw DimensionError("SparseRatMatrix: column out of range");
  }
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < row.size(); ++k) {
    if (row[k].first == row[k - 1].first) throw DimensionError("SparseRatMatrix: duplicate column");
  }
  if (!row.empty()) rows_.push_back(std::move(row));
}

RatVector SparseRatMatrix::multiply(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionError("SparseRatMatrix::multiply: size mismatch");
  RatVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [c, x] : rows_[i]) {
      if (!v[c].is_zero()) out[i] += x * v[c];
    }
  }
  return out;
}

RatMatrix SparseRatMatrix::to_dense() const {
  RatMatrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [c, x] : rows_[i]) m(i, c) = x;
  }
  return m;
}

RatVector normalize_integer(RatVector v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  }
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    ints[i] = v[i].numerator() * (lcm / v[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  int lead = 0;
  for (const auto& x : ints) {
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(Integer(ints[i] / g));
  return v;
}

namespace {

struct BlockKernel {
  std::vector<std::size_t> free_cols;  // local indices
  std::vector<RatVector> vectors;      // local coordinates
  std::size_t rank = 0;
};

/// Integer row: each rational row is multiplied by the lcm of its denominators.
std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer lcm = 1;
  for (const auto& x : row) {
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  }
  std::vector<Integer> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) out[j] = row[j].numerator() * (lcm / row[j].denominator());
  }
  return out;
}

/// Bareiss elimination to row echelon form, then one back substitution per
/// free column.
BlockKernel eliminate(std::vector<std::vector<Integer>> a, std::size_t cols, bool want_vectors) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = piv * a[i][j];
        if (sgn(f) != 0 && sgn(a[r][j]) != 0) t -= f * a[r][j];
        if (prev != 1 && sgn(t) != 0) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  BlockKernel out;
  out.rank = pivots.size();
  if (!want_vectors) return out;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols);
    x[f] = Rational(1);
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (sgn(a[k][j]) != 0 && !x[j].is_zero()) s += Rational(a[k][j]) * x[j];
      }
      x[pc] = -s / Rational(a[k][pc]);
    }
    out.free_cols.push_back(f);
    out.vectors.push_back(normalize_integer(std::move(x)));
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    a.push_back(integer_row(row));
  }
  return eliminate(std::move(a), m.cols(), true).vectors;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::vector<Integer>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    a.push_back(integer_row(row));
  }
  return eliminate(std::move(a), m.cols(), false).rank;
}

std::vector<RatVector> kernel_basis(const SparseRatMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::size_t> parent(cols);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& row : m.row_data()) {
    const std::size_t r0 = find_root(parent, row.front().first);
    for (std::size_t k = 1; k < row.size(); ++k) {
      const std::size_t rk = find_root(parent, row[k].first);
      if (rk != r0) parent[std::max(rk, r0)] = std::min(rk, r0);
    }
  }
  // Group columns and rows by block root.
  std::vector<std::vector<std::size_t>> block_cols(cols);
  std::vector<std::vector<std::size_t>> block_rows(cols);
  for (std::size_t c = 0; c < cols; ++c) block_cols[find_root(parent, c)].push_back(c);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    block_rows[find_root(parent, m.row_data()[i].front().first)].push_back(i);
  }

  std::vector<std::pair<std::size_t, RatVector>> found;  // (global free column, vector)
  std::vector<std::size_t> local(cols);
  for (std::size_t root = 0; root < cols; ++root) {
    const auto& bc = block_cols[root];
    if (bc.empty()) continue;
    for (std::size_t k = 0; k < bc.size(); ++k) local[bc[k]] = k;
    std::vector<std::vector<Integer>> a;
    a.reserve(block_rows[root].size());
    for (std::size_t i : block_rows[root]) {
      std::vector<Rational> dense(bc.size());
      for (const auto& [c, x] : m.row_data()[i]) dense[local[c]] = x;
      a.push_back(integer_row(dense));
    }
    BlockKernel k = eliminate(std::move(a), bc.size(), true);
    for (std::size_t t = 0; t < k.vectors.size(); ++t) {
      RatVector g(cols);
      for (std::size_t q = 0; q < bc.size(); ++q) g[bc[q]] = k.vectors[t][q];
      found.emplace_back(bc[k.free_cols[t]], std::move(g));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<RatVector> out;
  out.reserve(found.size());
  for (auto& [c, v] : found) out.push_back(std::move(v));
  return out;
}

}  // namespace crsym
