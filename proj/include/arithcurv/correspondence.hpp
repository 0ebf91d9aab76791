#ifndef ARITHCURV_CORRESPONDENCE_HPP
#define ARITHCURV_CORRESPONDENCE_HPP

#include <string>

#include "json.hpp"

#include "arithcurv/algebra.hpp"
#include "arithcurv/expr.hpp"

namespace arithcurv {

/// Gamma = (Spec F, pi, phi) with pi the structural inclusion E -> F and
/// phi given by the images of the matrix entries.
struct Correspondence {
  AlgebraPtr algebra;
  Matrix<AlgElem> phi_images;
  std::string label;  // "3", "bar5", "3*5" for compositions
  unsigned long prime = 0;  // p for Gamma_p and Gamma_pbar, the product for compositions

  std::size_t left_degree() const { return algebra->dimension(); }
};

/// phi(f): substitutes the images and divides in the algebra.
AlgElem phi_apply(const Correspondence& g, const RatFunc& f);
/// Gamma^*(f) = tr_pi(phi(f)).
RatFunc gamma_star(const Correspondence& g, const RatFunc& f);

/// Gamma1 o Gamma2, realized on F2 (x)_{phi2, E, pi1} F1: the generators of
/// F2 come first, then those of F1 with coefficients pushed through phi2.
/// Satisfies (Gamma1 o Gamma2)^* = Gamma2^* o Gamma1^*.
Correspondence compose_correspondences(const Correspondence& g1, const Correspondence& g2);

nlohmann::json algebra_to_json(const QuotAlgebra& alg, const VarTable& vars);
nlohmann::json to_json(const AlgElem& x, const VarTable& vars);
nlohmann::json to_json(const Correspondence& g, const VarTable& vars);

}  // namespace arithcurv

#endif  // ARITHCURV_CORRESPONDENCE_HPP
