#ifndef ARITHCURV_PADIC_HPP
#define ARITHCURV_PADIC_HPP

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"

#include "arithcurv/expr.hpp"
#include "arithcurv/matrix.hpp"

namespace arithcurv {

/// Work modulo p^K.
struct Precision {
  unsigned long p;
  unsigned K;

  Integer modulus() const;
};

/// Shared data of one (p, K, n) computation.
struct PadicContext {
  Precision prec;
  Integer modulus;
  VarTable vars;
  MPoly det;  // det(x)

  PadicContext(Precision pr, std::size_t n);
};
using PadicContextPtr = std::shared_ptr<const PadicContext>;

PadicContextPtr make_padic_context(Precision prec, std::size_t n);

/// poly / det(x)^det_pow with integer coefficients in [0, p^K).
class PadicElem {
 public:
  PadicElem() = default;
  PadicElem(PadicContextPtr ctx, const MPoly& poly, unsigned det_pow = 0);

  const PadicContextPtr& context() const { return ctx_; }
  const MPoly& poly() const { return poly_; }
  unsigned det_pow() const { return det_pow_; }

  bool is_zero() const { return poly_.is_zero(); }
  /// True if the element is divisible by p^k.
  bool divisible_by_p_power(unsigned k) const;

  PadicElem operator-() const;
  friend PadicElem operator+(const PadicElem& x, const PadicElem& y);
  friend PadicElem operator-(const PadicElem& x, const PadicElem& y);
  friend PadicElem operator*(const PadicElem& x, const PadicElem& y);
  PadicElem scaled(const Rational& c) const;
  /// Same element written over det^m, m >= det_pow().
  PadicElem with_det_pow(unsigned m) const;
  /// Cancels det(x) factors found by exact division.
  PadicElem normalized() const;

  friend bool operator==(const PadicElem& x, const PadicElem& y);

  std::string to_string() const;

 private:
  PadicContextPtr ctx_;
  MPoly poly_;
  unsigned det_pow_ = 0;
};

using PadicMatrix = Matrix<PadicElem>;

/// Reduces rational coefficients with denominators prime to p into [0, p^K).
MPoly reduce_mod(const MPoly& f, const Precision& prec);
/// c mod p^K for a p-integral rational c.
Integer reduce_mod(const Rational& c, const Precision& prec);

/// Inverse of e modulo p^K; requires e mod p = (unit) * det(x)^j.
PadicElem padic_invert(const PadicElem& e);

/// sum_{i < K} C(1/2, i) u^i; requires u = 0 mod p.
PadicMatrix sqrt_half_series(const PadicMatrix& u);

PadicMatrix to_padic(const PolyMatrix& m, const PadicContextPtr& ctx);
PadicMatrix padic_identity(const PadicContextPtr& ctx);

/// Phi_p = x^(p) {(x^(p)t q x^(p))^-1 (x^t q x)^(p)}^(1/2) mod p^K.
PadicMatrix chern_frobenius(const PolyMatrix& q, const Precision& prec);

struct DiagramResult {
  bool ok = false;
  std::size_t row = 0, col = 0;
  std::string witness;  // first offending difference, empty when ok
};

/// Phi^t q Phi == (x^t q x)^(p) mod p^K for the given candidate Phi.
DiagramResult check_chern_diagram(const PolyMatrix& q, const PadicMatrix& phi);
DiagramResult verify_chern_diagram(const PolyMatrix& q, const Precision& prec);

/// Entry-wise Phi == x^(p) mod p.
bool lifts_frobenius(const PadicMatrix& phi);

/// (q|p) q^((p-1)/2) x^p in one variable.
RatFunc gl1_chern(const Integer& q, unsigned long p);

/// Parses a square integer matrix [[..],[..]] with q^t = +-q and det(q) != 0.
PolyMatrix q_from_json(const nlohmann::json& j);

/// Validates p against q: p odd prime, p not dividing det(q).
void check_prime_for_q(const PolyMatrix& q, unsigned long p);

}  // namespace arithcurv

#endif  // ARITHCURV_PADIC_HPP
