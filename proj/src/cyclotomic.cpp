#include "arithcurv/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace arithcurv {

namespace {

// Exact division of univariate integer polynomials (constant term first).
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::vector<Integer> q(num.size() - den.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  // x^N - 1 = prod_{d | N} Phi_d(x)
  std::vector<Integer> num(order + 1);
  num[0] = -1;
  num[order] = 1;
  for (unsigned d = 1; d < order; ++d)
    if (order % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  return num;
}

CyclotomicNumber::CyclotomicNumber(unsigned order, const Rational& value) : order_(order) {
  std::size_t deg = cyclotomic_polynomial(order).size() - 1;
  coeffs_.assign(deg, Rational(0));
  coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned order, unsigned k) {
  CyclotomicNumber z(order);
  std::vector<Rational> v(k % order + 1, Rational(0));
  v.back() = 1;
  z.coeffs_ = reduce(std::move(v), order);
  return z;
}

std::vector<Rational> CyclotomicNumber::reduce(std::vector<Rational> v, unsigned order) {
  auto phi = cyclotomic_polynomial(order);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > deg;) {
    Rational c = v[k];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) v[k - deg + j] -= c * Rational(phi[j]);
  }
  v.resize(deg, Rational(0));
  return v;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order_ != y.order_) throw std::invalid_argument("cyclotomic order mismatch");
  CyclotomicNumber r = x;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += y.coeffs_[k];
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order_ != y.order_) throw std::invalid_argument("cyclotomic order mismatch");
  CyclotomicNumber r = x;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] -= y.coeffs_[k];
  return r;
}

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order_ != y.order_) throw std::invalid_argument("cyclotomic order mismatch");
  std::vector<Rational> v(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) v[i + j] += x.coeffs_[i] * y.coeffs_[j];
  CyclotomicNumber r(x.order_);
  r.coeffs_ = CyclotomicNumber::reduce(std::move(v), x.order_);
  return r;
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  return x.order_ == y.order_ && x.coeffs_ == y.coeffs_;
}

CyclotomicNumber CyclotomicNumber::frobenius(unsigned long p) const {
  std::vector<Rational> v(order_, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[(k * p) % order_] += coeffs_[k];
  CyclotomicNumber r(order_);
  r.coeffs_ = reduce(std::move(v), order_);
  return r;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeffs_[k].get_str();
    if (k > 0) out << "*z" << order_ << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return first ? "0" : out.str();
}

}  // namespace arithcurv
