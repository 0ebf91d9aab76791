#ifndef ARITHCURV_POLY_HPP
#define ARITHCURV_POLY_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arithcurv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Upper bound on the number of indeterminates in one session
/// (16 matrix entries for n = 4 plus the auxiliaries).
inline constexpr std::size_t kMaxVars = 24;

/// Thrown when an operation would exceed the session's term budget.
class TermLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global cap on the number of terms of any product; read once from
/// ARITHCURV_MAX_TERMS (default 10^7).
std::size_t max_terms();
void set_max_terms(std::size_t limit);

class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t var, unsigned exp = 1);

  unsigned operator[](std::size_t var) const { return exps_[var]; }
  void set(std::size_t var, unsigned exp);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(unsigned k) const;
  bool divides(const Monomial& other) const;

  static Monomial gcd(const Monomial& x, const Monomial& y);
  static Monomial lcm(const Monomial& x, const Monomial& y);

  /// Graded lexicographic; variable 0 is the largest.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
    return x.exps_ <=> y.exps_;
  }
  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.degree_ == y.degree_ && x.exps_ == y.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept in strictly
/// decreasing graded-lex order with no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MPoly variable(std::size_t var, unsigned exp = 1);
  static MPoly monomial(const Monomial& m, const Rational& c = 1);
  /// Sorts and merges arbitrary terms.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant value; throws if not constant.
  Rational constant_value() const;
  /// Coefficient of the given monomial (0 if absent).
  Rational coeff(const Monomial& m) const;

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Gcd of all monomials appearing (1 for the zero polynomial).
  Monomial monomial_content() const;
  /// Positive rational c such that this/c has coprime integer coefficients.
  Rational content() const;
  /// Least common multiple of coefficient denominators.
  Integer denominator_lcm() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);

  MPoly scaled(const Rational& c) const;
  MPoly times_monomial(const Monomial& m, const Rational& c = 1) const;
  /// Requires m to divide every monomial.
  MPoly divided_by_monomial(const Monomial& m) const;
  MPoly pow(unsigned k) const;

  /// Formal partial derivative.
  MPoly derivative(std::size_t var) const;
  /// Substitutes x_v -> x_v^k for every v in vars (a monomial map).
  MPoly exponent_scaled(std::span<const std::size_t> vars, unsigned k) const;
  /// Substitutes x_v -> sign_v * x_v; used for the involution x -> -x.
  MPoly sign_flipped(std::span<const std::size_t> vars) const;
  /// Replaces variable `var` by the constant `value`.
  MPoly evaluated(std::size_t var, const Rational& value) const;

  friend bool operator==(const MPoly& x, const MPoly& y);
  /// Total order used to sort factor lists deterministically.
  friend std::strong_ordering compare(const MPoly& x, const MPoly& y);

 private:
  std::vector<Term> terms_;
  friend std::optional<MPoly> exact_divide(const MPoly& x, const MPoly& y);
};

/// Exact quotient x / y when y divides x over Q, otherwise nullopt.
std::optional<MPoly> exact_divide(const MPoly& x, const MPoly& y);

}  // namespace arithcurv

#endif  // ARITHCURV_POLY_HPP
