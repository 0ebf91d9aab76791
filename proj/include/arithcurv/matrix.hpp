#ifndef ARITHCURV_MATRIX_HPP
#define ARITHCURV_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arithcurv/errors.hpp"
#include "arithcurv/poly.hpp"
#include "arithcurv/ratfunc.hpp"

namespace arithcurv {

/// Dense square matrix over a commutative ring T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix transpose() const {
    Matrix r = *this;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = x.data_[k] + y.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = x.data_[k] - y.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t j = 0; j < x.n_; ++j) {
        T acc = x(i, 0) * y(0, j);
        for (std::size_t k = 1; k < x.n_; ++k) acc = acc + x(i, k) * y(k, j);
        r(i, j) = std::move(acc);
      }
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.data_ == y.data_; }

 private:
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MPoly>;
using RatMatrix = Matrix<RatFunc>;

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
MPoly determinant(const PolyMatrix& m);
/// Determinant over E by Gaussian elimination (first nonzero pivot).
RatFunc determinant(const RatMatrix& m);
/// Inverse over E; throws NotInvertible if singular.
RatMatrix inverse(const RatMatrix& m);
/// Solves m * x = rhs over E; throws NotInvertible if m is singular.
std::vector<RatFunc> solve(const RatMatrix& m, std::vector<RatFunc> rhs);

RatMatrix to_ratmatrix(const PolyMatrix& m);
/// Integer matrix as constant polynomials.
PolyMatrix constant_matrix(const std::vector<std::vector<long>>& rows);
/// The matrix (x_ij) of indeterminates for a session of size n.
PolyMatrix variable_matrix(std::size_t n);

}  // namespace arithcurv

#endif  // ARITHCURV_MATRIX_HPP
