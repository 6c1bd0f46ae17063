#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcox/rational.hpp"

namespace qcox::linalg {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over an arbitrary scalar.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Exact inverse by Gauss-Jordan. Throws ConstructionError if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Row-style Hermite normal form of an integer generator matrix (one
/// generator per row). Returns the nonzero rows, upper triangular with
/// positive pivots and reduced entries above each pivot.
IntMatrix hermite_normal_form(const IntMatrix& generators);

/// Smith normal form U * m * V = diag(d_1, ..., d_n) of a square nonsingular
/// integer matrix, with d_i > 0 and d_i | d_{i+1}.
struct SmithForm {
  IntMatrix left;                     // U, unimodular
  IntMatrix right;                    // V, unimodular
  std::vector<std::int64_t> diagonal; // d_i
};
SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) row echelon form over the integers.
struct EchelonForm {
  Matrix<BigInt> rows;              // first `rank` rows are the echelon rows
  std::vector<std::size_t> pivots;  // pivot column of each echelon row
  std::size_t rank() const { return pivots.size(); }
};
EchelonForm bareiss_echelon(Matrix<BigInt> m);

/// Basis of {x : m x = 0}, one primitive integer vector per free column.
std::vector<std::vector<BigInt>> integer_nullspace(const Matrix<BigInt>& m);

}  // namespace qcox::linalg
