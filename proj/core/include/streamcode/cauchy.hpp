#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "streamcode/galois_field.hpp"

namespace streamcode {

/// Row-major dense matrix of field symbols.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

/// Sorted, duplicate-free list of row or column indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts the input; throws std::invalid_argument on duplicates.
  explicit IndexSet(std::vector<std::size_t> indices);

  /// {first, first+1, ..., first+count-1}
  static IndexSet range(std::size_t first, std::size_t count);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

/// Square Cauchy matrix with entry(i, j) = 1 / (x_i + y_j).
///
/// The x and y points are pairwise distinct and the two sets are disjoint,
/// so every square submatrix is nonsingular.
class CauchyMatrix {
 public:
  CauchyMatrix(GaloisField field, std::vector<Symbol> x_points, std::vector<Symbol> y_points);

  std::size_t dim() const { return x_.size(); }
  const GaloisField& field() const { return field_; }
  const std::vector<Symbol>& x_points() const { return x_; }
  const std::vector<Symbol>& y_points() const { return y_; }

  Symbol entry(std::size_t i, std::size_t j) const;
  DenseMatrix dense() const;

 private:
  GaloisField field_;
  std::vector<Symbol> x_;
  std::vector<Symbol> y_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// dim x dim Cauchy matrix whose 2*dim points are the head of a seeded
/// Fisher-Yates shuffle of the field. Requires 2*dim <= field order.
CauchyMatrix build_cauchy(std::size_t dim, const GaloisField& field, std::uint64_t seed);

DenseMatrix submatrix(const CauchyMatrix& a, const IndexSet& rows, const IndexSet& cols);
DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols);

DenseMatrix transpose(const DenseMatrix& m);

/// Row vector times matrix: result[c] = sum_r v[r] * m(r, c).
SymbolVec mat_vec(const GaloisField& field, std::span<const Symbol> v, const DenseMatrix& m);

/// Solves m * x = rhs for square nonsingular m (x, rhs column vectors).
/// Gaussian elimination with first-nonzero pivoting.
SymbolVec solve(const GaloisField& field, DenseMatrix m, SymbolVec rhs);

/// Solves x * m = rhs (x, rhs row vectors), i.e. inverts a mat_vec.
SymbolVec solve_left(const GaloisField& field, const DenseMatrix& m, SymbolVec rhs);

std::size_t rank(const GaloisField& field, DenseMatrix m);

}  // namespace streamcode
