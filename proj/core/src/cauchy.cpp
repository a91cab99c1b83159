#include "streamcode/cauchy.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

namespace streamcode {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("index set contains duplicates");
  }
}

IndexSet IndexSet::range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = first + i;
  return IndexSet(std::move(v));
}

CauchyMatrix::CauchyMatrix(GaloisField field, std::vector<Symbol> x_points,
                           std::vector<Symbol> y_points)
    : field_(std::move(field)), x_(std::move(x_points)), y_(std::move(y_points)) {
  if (x_.size() != y_.size()) {
    throw std::invalid_argument("Cauchy matrix needs as many x points as y points");
  }
  std::unordered_set<Symbol> seen;
  for (auto v : x_) {
    if (!field_.contains(v) || !seen.insert(v).second) {
      throw std::invalid_argument("Cauchy points must be distinct field elements");
    }
  }
  for (auto v : y_) {
    if (!field_.contains(v) || !seen.insert(v).second) {
      throw std::invalid_argument("Cauchy points must be distinct field elements");
    }
  }
}

Symbol CauchyMatrix::entry(std::size_t i, std::size_t j) const {
  return field_.inv(field_.add(x_.at(i), y_.at(j)));
}

DenseMatrix CauchyMatrix::dense() const {
  DenseMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = entry(i, j);
  }
  return m;
}

CauchyMatrix build_cauchy(std::size_t dim, const GaloisField& field, std::uint64_t seed) {
  if (2 * dim > field.order()) {
    throw std::invalid_argument("field of order " + std::to_string(field.order()) +
                                " is too small for a " + std::to_string(dim) +
                                "-dimensional Cauchy matrix");
  }
  std::vector<Symbol> pool(field.order());
  for (std::uint32_t v = 0; v < field.order(); ++v) pool[v] = static_cast<Symbol>(v);
  // Partial Fisher-Yates; mt19937_64 output is fully specified, so the
  // layout is identical on every platform.
  std::mt19937_64 rng(seed);
  const std::size_t n = pool.size();
  for (std::size_t i = 0; i < 2 * dim; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Symbol> x(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(dim));
  std::vector<Symbol> y(pool.begin() + static_cast<std::ptrdiff_t>(dim),
                        pool.begin() + static_cast<std::ptrdiff_t>(2 * dim));
  return CauchyMatrix(field, std::move(x), std::move(y));
}

DenseMatrix submatrix(const CauchyMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  for (auto r : rows) {
    if (r >= a.dim()) throw std::out_of_range("row index out of range");
  }
  for (auto c : cols) {
    if (c >= a.dim()) throw std::out_of_range("column index out of range");
  }
  DenseMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a.entry(rows[i], cols[j]);
  }
  return m;
}

DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  for (auto r : rows) {
    if (r >= a.rows()) throw std::out_of_range("row index out of range");
  }
  for (auto c : cols) {
    if (c >= a.cols()) throw std::out_of_range("column index out of range");
  }
  DenseMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(rows[i], cols[j]);
  }
  return m;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

SymbolVec mat_vec(const GaloisField& field, std::span<const Symbol> v, const DenseMatrix& m) {
  if (v.size() != m.rows()) {
    throw std::invalid_argument("mat_vec: vector length " + std::to_string(v.size()) +
                                " does not match " + std::to_string(m.rows()) + " rows");
  }
  SymbolVec out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    field.mul_add(v[r], m.row(r).data(), out.data(), m.cols());
  }
  return out;
}

SymbolVec solve(const GaloisField& field, DenseMatrix m, SymbolVec rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("solve: matrix is not square");
  if (rhs.size() != n) throw std::invalid_argument("solve: right-hand side length mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("solve: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      std::swap(rhs[pivot], rhs[col]);
    }
    const Symbol scale = field.inv(m(col, col));
    for (std::size_t c = col; c < n; ++c) m(col, c) = field.mul(m(col, c), scale);
    rhs[col] = field.mul(rhs[col], scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Symbol factor = m(r, col);
      field.mul_add(factor, m.row(col).data() + col, m.row(r).data() + col, n - col);
      rhs[r] = field.add(rhs[r], field.mul(factor, rhs[col]));
    }
  }
  return rhs;
}

SymbolVec solve_left(const GaloisField& field, const DenseMatrix& m, SymbolVec rhs) {
  return solve(field, transpose(m), std::move(rhs));
}

std::size_t rank(const GaloisField& field, DenseMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
    }
    const Symbol scale = field.inv(m(r, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.mul(m(r, c), scale);
    for (std::size_t below = r + 1; below < m.rows(); ++below) {
      if (m(below, col) == 0) continue;
      field.mul_add(m(below, col), m.row(r).data() + col, m.row(below).data() + col,
                    m.cols() - col);
    }
    ++r;
  }
  return r;
}

}  // namespace streamcode
