#include "arithcurv/matrix.hpp"

namespace arithcurv {

MPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix a = m;
  MPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return MPoly{};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = exact_divide(t, prev);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        a(i, j) = std::move(*q);
      }
      a(i, k) = MPoly{};
    }
    prev = a(k, k);
  }
  MPoly d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

RatFunc determinant(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatFunc det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return RatFunc{};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    RatFunc inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      RatFunc factor = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

std::vector<RatFunc> solve(const RatMatrix& m, std::vector<RatFunc> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  RatMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) throw NotInvertible("singular matrix over E");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(rhs[k], rhs[piv]);
    }
    RatFunc inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      RatFunc factor = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
      if (!rhs[k].is_zero()) rhs[i] -= factor * rhs[k];
      a(i, k) = RatFunc{};
    }
  }
  std::vector<RatFunc> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    RatFunc acc = rhs[ii];
    for (std::size_t j = ii + 1; j < n; ++j)
      if (!a(ii, j).is_zero() && !x[j].is_zero()) acc -= a(ii, j) * x[j];
    x[ii] = acc / a(ii, ii);
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) {
    if (m(0, 0).is_zero()) throw NotInvertible("singular matrix over E");
    return RatMatrix(1, m(0, 0).inverse());
  }
  if (n == 2) {
    RatFunc det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det.is_zero()) throw NotInvertible("singular matrix over E");
    RatFunc inv = det.inverse();
    RatMatrix r(2);
    r(0, 0) = m(1, 1) * inv;
    r(0, 1) = -(m(0, 1) * inv);
    r(1, 0) = -(m(1, 0) * inv);
    r(1, 1) = m(0, 0) * inv;
    return r;
  }
  RatMatrix r(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<RatFunc> e(n);
    e[j] = RatFunc(1);
    auto col = solve(m, std::move(e));
    for (std::size_t i = 0; i < n; ++i) r(i, j) = std::move(col[i]);
  }
  return r;
}

RatMatrix to_ratmatrix(const PolyMatrix& m) {
  return m.map([](const MPoly& p) { return RatFunc(p); });
}

PolyMatrix constant_matrix(const std::vector<std::vector<long>>& rows) {
  PolyMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = MPoly(rows[i][j]);
  }
  return m;
}

PolyMatrix variable_matrix(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = MPoly::variable(i * n + j);
  return m;
}

}  // namespace arithcurv
