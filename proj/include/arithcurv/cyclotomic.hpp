#ifndef ARITHCURV_CYCLOTOMIC_HPP
#define ARITHCURV_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "arithcurv/poly.hpp"

namespace arithcurv {

/// Element of Q(zeta_N), stored as a coefficient vector of length phi(N)
/// in the power basis of zeta_N, reduced modulo the N-th cyclotomic
/// polynomial. N = 1 is plain Q.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(unsigned order = 1, const Rational& value = 0);

  /// zeta_N^k.
  static CyclotomicNumber zeta(unsigned order, unsigned k = 1);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_rational() const;
  Rational rational_value() const;

  friend CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y);
  friend CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y);
  friend CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y);
  friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y);

  /// The lift of Frobenius zeta_N -> zeta_N^p, identity on Q.
  CyclotomicNumber frobenius(unsigned long p) const;

  std::string to_string() const;

 private:
  static std::vector<Rational> reduce(std::vector<Rational> v, unsigned order);

  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(unsigned order);

}  // namespace arithcurv

#endif  // ARITHCURV_CYCLOTOMIC_HPP
