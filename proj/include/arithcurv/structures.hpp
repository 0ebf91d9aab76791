#ifndef ARITHCURV_STRUCTURES_HPP
#define ARITHCURV_STRUCTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "arithcurv/correspondence.hpp"
#include "arithcurv/expr.hpp"
#include "arithcurv/matrix.hpp"

namespace arithcurv {

enum class QKind { antisymmetric, symmetric, identity };

/// The split forms [[0,1_r],[-1_r,0]], [[0,1_r],[1_r,0]] (n = 2r), or 1_n.
struct SplitQ {
  QKind kind;
  std::size_t n;

  PolyMatrix matrix() const;
  std::string name() const;
};

/// "split-antisym", "split-sym" or "identity"; throws std::invalid_argument.
SplitQ parse_preset(const std::string& name, std::size_t n);

/// det(x)^p / det(x^(p)).
RatFunc beta_p(unsigned long p, const VarTable& vars);

/// f_p = (x^(p)t q x^(p))^-1 (x^t q x)^(p) for an integer matrix q, evaluated
/// at an arbitrary polynomial matrix x.
RatMatrix matrix_fp_at(const PolyMatrix& q, unsigned long p, const PolyMatrix& x);
RatMatrix matrix_fp(const PolyMatrix& q, unsigned long p, const VarTable& vars);

/// g_p = det(x) det(x^(p)) det((x^t q x)^(p)).
MPoly g_p(const PolyMatrix& q, unsigned long p, const VarTable& vars);

/// Determinant of z -> (zb + bz)/2 on n x n matrices.
RatFunc jor(const RatMatrix& b);

struct UVW {
  RatFunc u, v, w;
};
/// Closed forms of the entries of f_p for the split symmetric 2 x 2 form.
UVW uvw(unsigned long p, const VarTable& vars);

/// Discriminant of the characteristic polynomial of a 2 x 2 matrix.
RatFunc char_disc(const RatMatrix& m);

/// 16u^2 - 16vw == 16((ad+bc)^(2p) - c4 a^p b^p c^p d^p)/(a^p d^p - b^p c^p)^2
/// with c4 = 4^p unless overridden.
bool jerry_disc_check(unsigned long p, const VarTable& vars, const Rational* c4 = nullptr);

/// f(s) = (s+1)^(2p) - 4^p s^p satisfies (s+1) f' - 2p f = 4^p p s^(p-1) (s-1).
bool fprime_identity_check(unsigned long p, const VarTable& vars);

/// Trivial algebra, phi(x) = x^(p); labelled "bar<p>".
Correspondence build_canonical(unsigned long p, const VarTable& vars);
/// E[t]/(t^2 - beta_p^k), phi(x) = t x^(p). k = 1 is the real structure;
/// other k only serve as mutation controls.
Correspondence build_antisym_gl2(unsigned long p, const VarTable& vars, unsigned beta_power = 1);
/// E[t]/(t^4 - 4u t^2 + 4vw), phi(x) = x^(p) [[t/2, v/t], [w/t, t/2]].
Correspondence build_sym_gl2(unsigned long p, const VarTable& vars);
/// 1/t = (4u t - t^3)/(4vw) in the quartic algebra of build_sym_gl2.
AlgElem sym_tau_inverse(const Correspondence& sym, const UVW& c);

struct CpPresentation {
  std::size_t n;
  unsigned long p;
  std::string q;
  RatMatrix fp;
  MPoly gp;
  /// Entries of y^2 - f_p(x), text.
  std::vector<std::string> relations;
  std::vector<std::string> inverted;
  /// Set when f_p is a scalar matrix lambda*1; the presentation then
  /// reduces to E[t]/(t^2 - lambda).
  std::optional<RatFunc> scalar;
};

CpPresentation general_cp_presentation(const SplitQ& q, unsigned long p, const VarTable& vars);
nlohmann::json to_json(const CpPresentation& c, const VarTable& vars);

/// Characteristic polynomial det(s*1 - m) in the auxiliary variable s.
RatFunc char_poly(const RatMatrix& m, const VarTable& vars);

/// n = 4 split symmetric form: setting the off-diagonal 2 x 2 blocks of
/// x~ = w x to zero turns Char(f_p(x)) into the product of the two 2 x 2
/// characteristic polynomials built from u, v, w.
bool block_reduction_check(unsigned long p);

}  // namespace arithcurv

#endif  // ARITHCURV_STRUCTURES_HPP
