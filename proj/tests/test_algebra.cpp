#include <random>

#include "doctest.h"

#include "arithcurv/core.hpp"
#include "arithcurv/correspondence.hpp"
#include "arithcurv/structures.hpp"

using namespace arithcurv;

namespace {

const VarTable kVars(2);

RatFunc R(const char* s) { return parse_ratfunc(s, kVars); }

RatFunc at_point(RatFunc f, const std::vector<long>& values) {
  for (std::size_t v = 0; v < values.size(); ++v) f = f.evaluated(v, Rational(values[v]));
  return f;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  auto poly = [&](bool nonzero) {
    MPoly p;
    do {
      std::vector<Term> terms;
      for (int i = 0; i < 3; ++i) {
        Monomial m;
        for (std::size_t v = 0; v < 4; ++v) m.set(v, exp(rng));
        terms.push_back(Term{m, Rational(coeff(rng))});
      }
      p = MPoly::from_terms(std::move(terms));
    } while (nonzero && p.is_zero());
    return p;
  };
  return RatFunc::fraction(poly(false), poly(true));
}

Matrix<AlgElem> lift(const PolyMatrix& m, const AlgebraPtr& alg) {
  return m.map([&alg](const MPoly& f) { return alg->scalar(RatFunc(f)); });
}

// phi(x)^t q phi(x) == (x^t q x)^(p) inside the structure's algebra.
bool diagram_holds(const Correspondence& g, const PolyMatrix& q, unsigned long p) {
  const Matrix<AlgElem> qa = lift(q, g.algebra);
  const Matrix<AlgElem> lhs = g.phi_images.transpose() * qa * g.phi_images;
  const PolyMatrix x = variable_matrix(q.size());
  const Matrix<AlgElem> rhs = lift(frob_twist(x.transpose() * q * x, p), g.algebra);
  return lhs == rhs;
}

}  // namespace

TEST_CASE("quadratic algebra multiplication and matrices") {
  const RatFunc b3 = beta_p(3, kVars);
  const Correspondence g = build_antisym_gl2(3, kVars);
  const AlgElem t = g.algebra->generator(0);
  CHECK(t * t == g.algebra->scalar(b3));
  CHECK(alg_mul(g.algebra->one(), t) == t);

  const RatMatrix m = mult_matrix(t);
  CHECK(m(0, 0).is_zero());
  CHECK(m(0, 1) == b3);
  CHECK(m(1, 0) == RatFunc(1));
  CHECK(m(1, 1).is_zero());
  CHECK(mult_matrix(g.algebra->one()) == RatMatrix::identity(2, RatFunc(0), RatFunc(1)));

  CHECK(trace_pi(t).is_zero());
  CHECK(trace_pi(g.algebra->one()) == RatFunc(2));
  CHECK(alg_inverse(t) == t.times(b3.inverse()));
  CHECK_THROWS_AS(alg_inverse(g.algebra->zero()), NotInvertible);
}

TEST_CASE("quartic algebra: relation, traces, inverse of tau") {
  const UVW c = uvw(3, kVars);
  const Correspondence g = build_sym_gl2(3, kVars);
  const auto& alg = g.algebra;
  const AlgElem t = alg->generator(0);
  const AlgElem t2 = t * t;
  CHECK(t2 * t2 == t2.times(c.u.scaled(4)) - alg->scalar((c.v * c.w).scaled(4)));

  const AlgElem tinv = alg_inverse(t);
  CHECK(tinv == sym_tau_inverse(g, c));
  CHECK(tinv * t == alg->one());

  CHECK(trace_pi(alg->one()) == RatFunc(4));
  CHECK(trace_pi(t).is_zero());
  CHECK(trace_pi(tinv).is_zero());
  CHECK(trace_pi(t2) == c.u.scaled(8));
  CHECK(determinant(mult_matrix(alg->one())) == RatFunc(1));
  RatFunc tr_m;
  const RatMatrix m2 = mult_matrix(t2);
  for (std::size_t i = 0; i < 4; ++i) tr_m += m2(i, i);
  CHECK(tr_m == c.u.scaled(8));
  CHECK(trace_pi(tinv * tinv) == c.u.scaled(2) / (c.v * c.w));
}

TEST_CASE("companion trace is minus the subleading coefficient") {
  const AlgebraPtr e = QuotAlgebra::base();
  const RatFunc c0 = R("a+b"), c1 = R("c/d"), c2 = R("a*d-b*c");
  const AlgebraPtr f = e->adjoin("t", {e->scalar(c0), e->scalar(c1), e->scalar(c2)});
  CHECK(trace_pi(f->generator(0)) == -c2);
  CHECK(f->dimension() == 3);
}

TEST_CASE("trace is E-linear and inverse multiplies back") {
  std::mt19937 rng(11);
  const Correspondence g = build_antisym_gl2(3, kVars);
  const auto& alg = g.algebra;
  for (int k = 0; k < 6; ++k) {
    const AlgElem x(alg, {random_ratfunc(rng), random_ratfunc(rng)});
    const AlgElem y(alg, {random_ratfunc(rng), random_ratfunc(rng)});
    const RatFunc e1 = random_ratfunc(rng), e2 = random_ratfunc(rng);
    CHECK(trace_pi(x.times(e1) + y.times(e2)) == e1 * trace_pi(x) + e2 * trace_pi(y));
    if (!x.is_zero()) CHECK(alg_inverse(x) * x == alg->one());
  }
}

TEST_CASE("phi_apply and gamma_star on the three structures") {
  const unsigned long p = 3;
  const Correspondence can = build_canonical(p, kVars);
  const Correspondence anti = build_antisym_gl2(p, kVars);
  const Correspondence sym = build_sym_gl2(p, kVars);
  const RatFunc b3 = beta_p(p, kVars);

  CHECK(can.left_degree() == 1);
  CHECK(gamma_star(can, R("a*b")) == R("a^3*b^3"));
  CHECK(gamma_star(can, R("a*d-b*c")) == R("a^3*d^3-b^3*c^3"));
  CHECK(phi_apply(can, R("a/(a*d-b*c)")) == can.algebra->scalar(R("a^3/(a^3*d^3-b^3*c^3)")));

  CHECK(phi_apply(anti, R("a")) == anti.algebra->generator(0).times(R("a^3")));
  CHECK(gamma_star(anti, R("a*b")) == b3 * R("2*a^3*b^3"));
  CHECK(gamma_star(anti, R("a")).is_zero());
  CHECK(gamma_star(anti, R("a*b*c")).is_zero());

  const AlgElem ab = phi_apply(sym, R("a*b"));
  CHECK(ab.is_scalar());
  CHECK(ab[0] == R("4*a^3*b^3"));
  CHECK(gamma_star(sym, R("a*b")) == R("16*a^3*b^3"));

  for (const Correspondence* g : {&can, &anti, &sym}) {
    CHECK(gamma_star(*g, RatFunc(1)) == RatFunc(static_cast<long>(g->left_degree())));
    const RatFunc f = R("a*b+c/d"), h = R("a^2 - d");
    CHECK(gamma_star(*g, f + h) == gamma_star(*g, f) + gamma_star(*g, h));
  }
}

TEST_CASE("zero divisors are not invertible") {
  const Correspondence anti = build_antisym_gl2(3, kVars);
  CHECK_NOTHROW(phi_apply(anti, R("1/(a*d-b*c)")));
  // With beta^0 the relation is t^2 = 1 and 1 + t is a zero divisor.
  const Correspondence deg = build_antisym_gl2(3, kVars, 0);
  const AlgElem t = deg.algebra->generator(0);
  CHECK_THROWS_AS(alg_inverse(deg.algebra->one() + t), NotInvertible);
}

TEST_CASE("composition of correspondences") {
  const Correspondence c3 = build_canonical(3, kVars), c5 = build_canonical(5, kVars);
  const Correspondence cc = compose_correspondences(c3, c5);
  CHECK(cc.left_degree() == 1);
  CHECK(cc.phi_images(0, 1) == cc.algebra->scalar(R("b^15")));

  const Correspondence a3 = build_antisym_gl2(3, kVars), a5 = build_antisym_gl2(5, kVars);
  const Correspondence a53 = compose_correspondences(a5, a3);
  CHECK(a53.left_degree() == 4);
  const RatFunc ab = R("a*b");
  CHECK(gamma_star(a53, ab) == gamma_star(a3, gamma_star(a5, ab)));
  CHECK(gamma_star(compose_correspondences(a3, a5), ab) == gamma_star(a5, gamma_star(a3, ab)));
  CHECK(gamma_star(compose_correspondences(a3, c5), R("a^2")) == gamma_star(c5, gamma_star(a3, R("a^2"))));
  CHECK(gamma_star(compose_correspondences(c5, a3), R("a*d")) == gamma_star(a3, gamma_star(c5, R("a*d"))));
}

TEST_CASE("beta_p and f_p") {
  const RatFunc b3 = beta_p(3, kVars);
  CHECK(b3 == R("a*d-b*c").pow(3) / R("a^3*d^3-b^3*c^3"));
  CHECK(b3.evaluated(1, 0).evaluated(2, 0) == RatFunc(1));
  // phi_5(beta_3) beta_5^3 = det^15 / det(x^(15))
  const RatFunc lhs = frobenius_subst(b3, 5, kVars) * beta_p(5, kVars).pow(3);
  CHECK(lhs == R("a*d-b*c").pow(15) / R("a^15*d^15-b^15*c^15"));

  const PolyMatrix qa = SplitQ{QKind::antisymmetric, 2}.matrix();
  const PolyMatrix qs = SplitQ{QKind::symmetric, 2}.matrix();
  const PolyMatrix x = variable_matrix(2);
  CHECK(x.transpose() * qa * x == qa.map([](const MPoly& f) { return f * det_x(VarTable(2)); }));

  const RatMatrix fa = matrix_fp(qa, 3, kVars);
  CHECK(fa == RatMatrix::identity(2, RatFunc(0), b3));
  for (unsigned long p : {3ul, 5ul}) {
    const UVW c = uvw(p, kVars);
    const RatMatrix fs = matrix_fp(qs, p, kVars);
    CHECK(fs(0, 0) == c.u);
    CHECK(fs(0, 1) == c.v);
    CHECK(fs(1, 0) == c.w);
    CHECK(fs(1, 1) == c.u);
    CHECK(char_disc(fs) == (c.v * c.w).scaled(4));
  }
  const RatMatrix fs = matrix_fp(qs, 3, kVars);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(at_point(fs(i, j), {1, 0, 0, 1}) == RatFunc(i == j ? 1 : 0));

  const UVW c = uvw(3, kVars);
  CHECK(at_point(c.u, {5, 0, 0, 7}) == RatFunc(1));
  CHECK(c.v.evaluated(1, 0).evaluated(2, 0).is_zero());
  CHECK(c.w.evaluated(1, 0).evaluated(2, 0).is_zero());
}

TEST_CASE("f_p - 1 vanishes mod p for split forms") {
  for (unsigned long p : {3ul, 5ul})
    for (QKind k : {QKind::antisymmetric, QKind::symmetric}) {
      const RatMatrix f = matrix_fp(SplitQ{k, 2}.matrix(), p, kVars);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          const RatFunc d = f(i, j) - RatFunc(i == j ? 1 : 0);
          const MPoly num = d.num().scaled(Rational(d.num().denominator_lcm()));
          const MPoly den = d.den();
          const MPoly den_int = den.scaled(Rational(den.denominator_lcm()) / den.content());
          for (const auto& term : num.terms()) CHECK(mpz_divisible_ui_p(term.coeff.get_num_mpz_t(), p));
          bool unit = false;
          for (const auto& term : den_int.terms()) unit = unit || !mpz_divisible_ui_p(term.coeff.get_num_mpz_t(), p);
          CHECK(unit);
        }
    }
}

TEST_CASE("g_p") {
  const VarTable v1(1);
  CHECK(g_p(SplitQ{QKind::identity, 1}.matrix(), 3, v1) == MPoly::variable(0, 10));
  const PolyMatrix qa = SplitQ{QKind::antisymmetric, 2}.matrix();
  const MPoly det = det_x(kVars);
  CHECK(g_p(qa, 3, kVars) == det * frobenius_subst(det, 3, kVars) * det.pow(6));
  const MPoly gs = g_p(SplitQ{QKind::symmetric, 2}.matrix(), 3, kVars);
  CHECK_FALSE(gs.is_zero());
  CHECK_FALSE(at_point(RatFunc(gs), {2, 3, 5, 11}).is_zero());
}

TEST_CASE("jor") {
  for (std::size_t n : {2u, 3u}) CHECK(jor(RatMatrix::identity(n, RatFunc(0), RatFunc(1))) == RatFunc(1));
  const RatMatrix b = to_ratmatrix(variable_matrix(2));
  const RatFunc tr = b(0, 0) + b(1, 1);
  CHECK(jor(b) == (tr * tr * determinant(b)).scaled(Rational(1, 4)));
  RatMatrix d(2);
  d(0, 0) = RatFunc(1);
  d(1, 1) = RatFunc(-1);
  CHECK(jor(d).is_zero());
}

TEST_CASE("discriminants and the derivative identity") {
  CHECK(char_disc(RatMatrix::identity(2, RatFunc(0), RatFunc(1))).is_zero());
  RatMatrix m(2);
  m(0, 0) = RatFunc(1);
  m(1, 1) = RatFunc(2);
  CHECK(char_disc(m) == RatFunc(1));

  CHECK(jerry_disc_check(3, kVars));
  CHECK(jerry_disc_check(5, kVars));
  const Rational bad(65);
  CHECK_FALSE(jerry_disc_check(3, kVars, &bad));

  CHECK(fprime_identity_check(3, kVars));
  CHECK(fprime_identity_check(5, kVars));
  const MPoly s = MPoly::variable(kVars.s());
  const MPoly f = (s + MPoly(1)).pow(6) - s.pow(3).scaled(64);
  CHECK((s + MPoly(1)) * f.derivative(kVars.s()) - f.scaled(6) == s.pow(2).scaled(192) * (s - MPoly(1)));
  CHECK(f.evaluated(kVars.s(), 1).is_zero());
}

TEST_CASE("structure properties") {
  const unsigned long p = 3;
  const Correspondence anti = build_antisym_gl2(p, kVars);
  const Correspondence sym = build_sym_gl2(p, kVars);

  // Even monomials land in the t-free part for the antisymmetric structure.
  for (const char* m : {"a^2", "a*b", "c*d", "b^2*c*d"}) CHECK(phi_apply(anti, R(m)).is_scalar());

  const UVW c = uvw(p, kVars);
  const AlgElem t = sym.algebra->generator(0);
  const AlgElem tinv = sym_tau_inverse(sym, c);
  const AlgElem alpha = t.scaled(Rational(1, 2));
  CHECK(alpha * alpha + tinv.times(c.v) * tinv.times(c.w) == sym.algebra->scalar(c.u));

  const AlgElem ad = phi_apply(sym, R("a*d"));
  CHECK(ad[2] == R("a^3*d^3-b^3*c^3").scaled(Rational(1, 4)));
  CHECK(ad[1].is_zero());
  CHECK(ad[3].is_zero());

  CHECK(diagram_holds(anti, SplitQ{QKind::antisymmetric, 2}.matrix(), p));
  CHECK(diagram_holds(sym, SplitQ{QKind::symmetric, 2}.matrix(), p));
  CHECK(diagram_holds(build_canonical(p, kVars), SplitQ{QKind::identity, 2}.matrix(), p) == false);
}

TEST_CASE("C_p presentations") {
  const CpPresentation a = general_cp_presentation(SplitQ{QKind::antisymmetric, 2}, 3, kVars);
  REQUIRE(a.scalar.has_value());
  CHECK(*a.scalar == beta_p(3, kVars));
  CHECK(a.relations.size() == 4);
  CHECK(a.relations[1] == "y11*y12 + y12*y22");
  const auto j = to_json(a, kVars);
  CHECK(j["scalar_relation"].get<std::string>().rfind("t^2 - (", 0) == 0);

  const CpPresentation s = general_cp_presentation(SplitQ{QKind::symmetric, 2}, 3, kVars);
  CHECK_FALSE(s.scalar.has_value());
  const UVW c = uvw(3, kVars);
  CHECK(s.fp(0, 1) == c.v);
  CHECK(s.inverted.size() == 3);

  CHECK(block_reduction_check(3));
}

TEST_CASE("algebra json") {
  const Correspondence anti = build_antisym_gl2(3, kVars);
  const auto j = to_json(anti, kVars);
  CHECK(j["left_degree"] == 2);
  CHECK(j["algebra"]["generators"][0]["name"] == "t3");
  CHECK(j["phi_images"][0][0][1] == "a^3");
}
