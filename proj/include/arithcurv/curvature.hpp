#ifndef ARITHCURV_CURVATURE_HPP
#define ARITHCURV_CURVATURE_HPP

#include <string>
#include <vector>

#include "arithcurv/check.hpp"
#include "arithcurv/correspondence.hpp"
#include "arithcurv/structures.hpp"

namespace arithcurv {

struct CurvatureReport {
  std::string first;   // label of Gamma_p
  std::string second;  // label of Gamma_p' or Gamma_bar p'
  unsigned long p = 0;
  unsigned long p2 = 0;
  RatFunc input;
  RatFunc lhs;  // Gamma_2^*(Gamma_1^*(e))
  RatFunc rhs;  // Gamma_1^*(Gamma_2^*(e))
  Rational scale;
  RatFunc value;  // scale * (lhs - rhs)
  bool zero = true;
};

/// (1/pp') (Gamma_p'^* Gamma_p^* - Gamma_p^* Gamma_p'^*) at e.
CurvatureReport curvature(const Correspondence& gp, const Correspondence& gp2, const RatFunc& e);
/// Same with the canonical Gamma_bar p' in the second slot; the scale is
/// 1/(pp') for p != p' and 1/p for p = p'.
CurvatureReport one_one_curvature(const Correspondence& gp, unsigned long p2, const RatFunc& e, const VarTable& vars);
/// Commutator computed through the composed correspondences instead of
/// nested traces.
CurvatureReport curvature_via_composition(const Correspondence& gp, const Correspondence& gp2, const RatFunc& e);

/// The ten degree-2 and four degree-1 monomials in a, b, c, d.
std::vector<RatFunc> claim5_inputs(const VarTable& vars);

/// Antisymmetric structures: curvature vanishes on claim5_inputs and on abc.
/// beta_power != 1 builds a mutated Gamma_p (Gamma_p' stays intact).
std::vector<Check> verify_claim5(unsigned long p, unsigned long p2, const VarTable& vars, unsigned beta_power = 1);

/// psi^+ and psi^- in F_pp' (x)_E F_p'p.
std::vector<Check> psi_partial_commute_check(unsigned long p, unsigned long p2, const VarTable& vars);

/// Non-vanishing of the (1,1)-curvature: a^2 for the antisymmetric
/// structure, ab for the symmetric one.
std::vector<Check> verify_nonvanishing_11(QKind kind, unsigned long p, unsigned long p2, const VarTable& vars);

/// Gamma^* kills odd monomials and keeps even ones in E+, up to the given
/// total degree; for the quartic structure also the witness of
/// non-inducedness.
std::vector<Check> partial_induction_check(const Correspondence& g, unsigned max_degree, const VarTable& vars,
                                           bool expect_induced);

std::vector<Check> traces_suite(unsigned long p, const VarTable& vars);
std::vector<Check> jerry_suite(unsigned long p, const VarTable& vars);
std::vector<Check> fprime_suite(unsigned long p, const VarTable& vars);
std::vector<Check> jor2_suite(const VarTable& vars);

/// All monomials in the matrix entries of total degree exactly k.
std::vector<MPoly> monomials_of_degree(const VarTable& vars, unsigned k);

}  // namespace arithcurv

#endif  // ARITHCURV_CURVATURE_HPP
