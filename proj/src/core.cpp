#include "arithcurv/core.hpp"

namespace arithcurv {

RatFunc subst(const RatFunc& f, std::span<const RatFunc> images) {
  const RatFunc one(1);
  RatFunc num = evaluate(f.num(), images, one);
  RatFunc den = evaluate(MPoly::monomial(f.den_monomial()), images, one);
  for (const auto& fac : f.den_factors())
    den *= evaluate(fac.poly, images, one).pow(static_cast<int>(fac.exp));
  if (den.is_zero()) throw DivisionByZero("denominator maps to zero under substitution");
  return num / den;
}

RatFunc frobenius_subst(const RatFunc& f, unsigned long p, const VarTable& vars) {
  return f.exponent_scaled(vars.entries(), static_cast<unsigned>(p));
}

MPoly frobenius_subst(const MPoly& f, unsigned long p, const VarTable& vars) {
  return f.exponent_scaled(vars.entries(), static_cast<unsigned>(p));
}

RatMatrix frob_twist(const RatMatrix& m, unsigned long p) {
  return m.map([p](const RatFunc& e) { return e.pow(static_cast<int>(p)); });
}

PolyMatrix frob_twist(const PolyMatrix& m, unsigned long p) {
  return m.map([p](const MPoly& e) { return e.pow(static_cast<unsigned>(p)); });
}

RatFunc iota(const RatFunc& f, const VarTable& vars) { return f.sign_flipped(vars.entries()); }

IotaSplit iota_split(const RatFunc& f, const VarTable& vars) {
  RatFunc g = iota(f, vars);
  const Rational half(1, 2);
  return IotaSplit{(f + g).scaled(half), (f - g).scaled(half)};
}

MPoly det_x(const VarTable& vars) { return determinant(variable_matrix(vars.n())); }

}  // namespace arithcurv
