#ifndef ARITHCURV_RATFUNC_HPP
#define ARITHCURV_RATFUNC_HPP

#include <span>
#include <vector>

#include "arithcurv/errors.hpp"
#include "arithcurv/poly.hpp"

namespace arithcurv {

/// One factor of a denominator: poly^exp, poly non-constant, free of
/// monomial content and with leading coefficient 1.
struct DenFactor {
  MPoly poly;
  unsigned exp;
};

/// Element of E = K(x): num / (mono * prod factor^exp).
///
/// Denominators are kept factored. Factors are never merged by gcd; they
/// are only cancelled against the numerator by exact trial division, so
/// two equal functions may have different representations. Use
/// operator== (cross-multiplication) for equality.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  /// num / den; throws DivisionByZero if den is zero.
  static RatFunc fraction(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const Monomial& den_monomial() const { return den_mono_; }
  const std::vector<DenFactor>& den_factors() const { return den_factors_; }
  /// Fully expanded denominator.
  MPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_mono_.is_one() && den_factors_.empty(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }

  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc scaled(const Rational& c) const;

  /// Substitutes x_v -> x_v^k for v in vars.
  RatFunc exponent_scaled(std::span<const std::size_t> vars, unsigned k) const;
  /// Substitutes x_v -> -x_v for v in vars.
  RatFunc sign_flipped(std::span<const std::size_t> vars) const;
  /// Replaces one variable by a rational constant; throws DivisionByZero
  /// if the denominator vanishes.
  RatFunc evaluated(std::size_t var, const Rational& value) const;

  /// Exact equality in E by cross-multiplication over the common denominator.
  friend bool operator==(const RatFunc& x, const RatFunc& y);

 private:
  static RatFunc from_parts(MPoly num, Monomial mono, std::vector<DenFactor> raw);
  RatFunc inverse_with(std::span<const DenFactor> hints) const;
  void cancel();

  MPoly num_;
  Monomial den_mono_;
  std::vector<DenFactor> den_factors_;  // sorted by compare(), distinct
};

/// Exact equality test; same as operator==.
inline bool ratfunc_eq(const RatFunc& f, const RatFunc& g) { return f == g; }

}  // namespace arithcurv

#endif  // ARITHCURV_RATFUNC_HPP
