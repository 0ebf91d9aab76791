#ifndef ARITHCURV_CORE_HPP
#define ARITHCURV_CORE_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arithcurv/expr.hpp"
#include "arithcurv/matrix.hpp"
#include "arithcurv/ratfunc.hpp"

namespace arithcurv {

/// Image of f under the ring map sending x_v to images[v]. The target
/// ring R needs +, * and scaled(Rational). Variables of f beyond
/// images.size() must not occur.
template <class R>
R evaluate(const MPoly& f, std::span<const R> images, const R& one) {
  if (f.is_zero()) return one.scaled(0);
  // powers[v][e] = images[v]^e, filled on demand
  std::vector<std::vector<R>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const R& {
    auto& pv = powers[v];
    if (pv.empty()) {
      pv.push_back(one);
      pv.push_back(images[v]);
    }
    while (pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  std::optional<R> acc;
  for (const auto& t : f.terms()) {
    std::optional<R> term;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      unsigned e = t.mono[v];
      if (e == 0) continue;
      if (v >= images.size()) throw std::invalid_argument("substitution misses a variable");
      term = term ? *term * power(v, e) : power(v, e);
    }
    R scaled_term = term ? term->scaled(t.coeff) : one.scaled(t.coeff);
    acc = acc ? *acc + scaled_term : std::move(scaled_term);
  }
  return *acc;
}

/// Homomorphic image of f in E under x_v -> images[v].
RatFunc subst(const RatFunc& f, std::span<const RatFunc> images);

/// The ring map x -> x^(p) (all matrix entries raised to the p-th power).
RatFunc frobenius_subst(const RatFunc& f, unsigned long p, const VarTable& vars);
MPoly frobenius_subst(const MPoly& f, unsigned long p, const VarTable& vars);

/// Entry-wise p-th power M^(p).
RatMatrix frob_twist(const RatMatrix& m, unsigned long p);
PolyMatrix frob_twist(const PolyMatrix& m, unsigned long p);

/// The involution iota(x) = -x on E.
RatFunc iota(const RatFunc& f, const VarTable& vars);

struct IotaSplit {
  RatFunc plus;   // iota-invariant part
  RatFunc minus;  // iota-anti-invariant part
};
IotaSplit iota_split(const RatFunc& f, const VarTable& vars);

/// Formal partial derivative.
inline MPoly poly_derivative(const MPoly& f, std::size_t var) { return f.derivative(var); }

/// det(x) for the session's matrix of indeterminates.
MPoly det_x(const VarTable& vars);

}  // namespace arithcurv

#endif  // ARITHCURV_CORE_HPP
