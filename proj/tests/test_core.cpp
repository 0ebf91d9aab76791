#include <random>

#include "doctest.h"

#include "arithcurv/core.hpp"
#include "arithcurv/cyclotomic.hpp"
#include "arithcurv/expr.hpp"
#include "arithcurv/numtheory.hpp"

using namespace arithcurv;

namespace {

const VarTable kVars(2);

RatFunc R(const char* s) { return parse_ratfunc(s, kVars); }
MPoly P(const char* s) { return parse_poly(s, kVars); }

MPoly random_poly(std::mt19937& rng, unsigned max_terms, unsigned max_deg) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_deg);
  std::vector<Term> terms;
  unsigned k = nterms(rng);
  for (unsigned i = 0; i < k; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < 4; ++v) m.set(v, exp(rng));
    terms.push_back(Term{m, Rational(coeff(rng))});
  }
  return MPoly::from_terms(std::move(terms));
}

MPoly nonzero_poly(std::mt19937& rng, unsigned max_terms, unsigned max_deg) {
  MPoly p;
  while (p.is_zero()) p = random_poly(rng, max_terms, max_deg);
  return p;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  return RatFunc::fraction(random_poly(rng, 3, 2), nonzero_poly(rng, 3, 2));
}

}  // namespace

TEST_CASE("ratfunc arithmetic") {
  CHECK(R("a/d") + R("b/d") == R("(a+b)/d"));
  CHECK(R("a*d-b*c") * R("1/(a*d-b*c)") == RatFunc(1));
  CHECK((R("a*d-b*c") * R("1/(a*d-b*c)")).is_constant());
  CHECK(R("(a^2-b^2)/(a-b)") == R("a+b"));
  CHECK_THROWS_AS(R("a") / RatFunc(0), DivisionByZero);
  CHECK(R("a/b") - R("a/b") == RatFunc(0));
}

TEST_CASE("ratfunc_eq") {
  CHECK(ratfunc_eq(R("a/b"), R("a/b")));
  CHECK(ratfunc_eq(R("(a^2-b^2)/(a-b)"), R("a+b")));
  CHECK_FALSE(ratfunc_eq(R("a/b"), R("b/a")));
  // det(x)^p / det(x^(p)) for p = 3 and p = 5
  RatFunc b3 = R("a*d-b*c").pow(3) / R("a^3*d^3 - b^3*c^3");
  RatFunc b5 = R("a*d-b*c").pow(5) / R("a^5*d^5 - b^5*c^5");
  CHECK_FALSE(ratfunc_eq(b3, b5));
  CHECK(ratfunc_eq(b3, b3 * RatFunc(1)));
}

TEST_CASE("cancellation keeps fractions reduced against their factors") {
  RatFunc f = R("a*d-b*c") / R("a^2*d - a*b*c");
  CHECK(f == R("1/a"));
  CHECK(f.is_polynomial() == false);
  CHECK(f.den_factors().empty());
  RatFunc g = R("1/(a+b)") * R("(a^2-b^2)/c");
  CHECK(g == R("(a-b)/c"));
  CHECK(g.den_factors().empty());
}

TEST_CASE("subst") {
  std::vector<RatFunc> cubes{R("a^3"), R("b^3"), R("c^3"), R("d^3")};
  CHECK(subst(R("a*b"), cubes) == R("a^3*b^3"));
  CHECK(frobenius_subst(RatFunc(det_x(kVars)), 5, kVars) == R("a^5*d^5 - b^5*c^5"));
  std::vector<RatFunc> neg{R("-a"), R("-b"), R("-c"), R("-d")};
  CHECK(subst(R("1/(a*d-b*c)"), neg) == R("1/(a*d-b*c)"));
  CHECK(subst(R("1/(a*d-b*c)"), neg) == iota(R("1/(a*d-b*c)"), kVars));
  std::vector<RatFunc> degenerate{R("a"), R("a"), R("a"), R("a")};
  CHECK_THROWS_AS(subst(R("1/(a*d-b*c)"), degenerate), DivisionByZero);
}

TEST_CASE("frob_twist") {
  RatMatrix x = to_ratmatrix(variable_matrix(2));
  RatMatrix x3 = frob_twist(x, 3);
  CHECK(x3(0, 0) == R("a^3"));
  CHECK(x3(0, 1) == R("b^3"));
  CHECK(x3(1, 0) == R("c^3"));
  CHECK(x3(1, 1) == R("d^3"));
  RatMatrix id = RatMatrix::identity(2, RatFunc(0), RatFunc(1));
  CHECK(frob_twist(id, 7) == id);
  CHECK(determinant(frob_twist(x, 5)) == R("a^5*d^5 - b^5*c^5"));
}

TEST_CASE("iota_split") {
  auto s1 = iota_split(R("a*b"), kVars);
  CHECK(s1.plus == R("a*b"));
  CHECK(s1.minus.is_zero());
  auto s2 = iota_split(R("a"), kVars);
  CHECK(s2.plus.is_zero());
  CHECK(s2.minus == R("a"));
  auto s3 = iota_split(R("a/d"), kVars);
  CHECK(s3.plus == R("a/d"));
  CHECK(s3.minus.is_zero());
}

TEST_CASE("poly_derivative") {
  const std::size_t s = kVars.s();
  CHECK(poly_derivative(P("s^2"), s) == P("2*s"));
  MPoly sp1 = (P("s") + MPoly(1));
  CHECK(poly_derivative(sp1.pow(6), s) == sp1.pow(5).scaled(6));
  CHECK(poly_derivative(MPoly(7), s).is_zero());
}

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(1, 3) == 1);
  CHECK(legendre_symbol(1, 11) == 1);
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(2, 5) == -1);
  CHECK(legendre_symbol(10, 5) == 0);
  CHECK_THROWS(legendre_symbol(3, 2));
}

TEST_CASE("fermat_quotient") {
  CHECK(fermat_quotient(1, 3) == 0);
  CHECK(fermat_quotient(2, 3) == -2);
  CHECK(fermat_quotient(2, 5) == -6);
}

TEST_CASE("expression grammar") {
  CHECK_THROWS_AS(R("a+*b"), ParseError);
  CHECK_THROWS_AS(R("a + e"), ParseError);
  CHECK_THROWS_AS(R("a/0"), ParseError);
  CHECK(R("x11*x22 - x12*x21") == RatFunc(det_x(kVars)));
  CHECK(to_string(R("a*d - b*c"), kVars) == "a*d - b*c");
  CHECK(to_string(R("-3*a^2 + 1"), kVars) == "-3*a^2 + 1");
  CHECK(to_string(R("a/2"), kVars) == "a / 2");
  CHECK(to_string(R("(a*d - b*c)/(a^3*d^3-b^3*c^3)"), kVars) ==
        "a*d - b*c / a^3*d^3 - b^3*c^3");
  VarTable v3(3);
  CHECK(v3.name(4) == "x22");
  CHECK(to_string(parse_poly("x11*x33 + 2*t", v3), v3) == "x11*x33 + 2*t");
}

TEST_CASE("property: printing then parsing is the identity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    RatFunc f = random_ratfunc(rng);
    CHECK(parse_ratfunc(to_string(f, kVars), kVars) == f);
  }
}

TEST_CASE("property: equality is compatible with multiplication") {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = random_ratfunc(rng);
    RatFunc h = random_ratfunc(rng);
    // g and k equal f and h but carry a different representation.
    MPoly r = nonzero_poly(rng, 2, 2);
    RatFunc g = RatFunc::fraction(f.num() * r, f.den() * r);
    RatFunc k = (h + RatFunc(r)) - RatFunc(r);
    REQUIRE(f == g);
    REQUIRE(h == k);
    CHECK(f * h == g * k);
    CHECK(f + h == g + k);
    if (!h.is_zero()) CHECK(f / h == g / k);
  }
}

TEST_CASE("property: iota_split is idempotent and additive") {
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = random_ratfunc(rng);
    RatFunc g = random_ratfunc(rng);
    auto sf = iota_split(f, kVars);
    auto sg = iota_split(g, kVars);
    CHECK(sf.plus + sf.minus == f);
    auto again = iota_split(sf.plus, kVars);
    CHECK(again.plus == sf.plus);
    CHECK(again.minus.is_zero());
    auto sum = iota_split(f + g, kVars);
    CHECK(sum.plus == sf.plus + sg.plus);
    CHECK(sum.minus == sf.minus + sg.minus);
  }
}

TEST_CASE("property: Frobenius twists compose") {
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = random_ratfunc(rng);
    for (auto [p, q] : {std::pair{3ul, 5ul}, std::pair{5ul, 7ul}}) {
      CHECK(frobenius_subst(frobenius_subst(f, p, kVars), q, kVars) == frobenius_subst(f, p * q, kVars));
    }
  }
}

TEST_CASE("property: Euler criterion and the p-derivation law on Z") {
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
    for (long q = -20; q <= 20; ++q) {
      Integer r;
      Integer base = Integer(q) % Integer(p);
      if (base < 0) base += p;
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, Integer(p).get_mpz_t());
      int ls = legendre_symbol(q, p);
      Integer expected = ls >= 0 ? Integer(ls) : Integer(p - 1);
      CHECK(r == expected);
    }
    for (long m = -6; m <= 6; ++m) {
      for (long n = -6; n <= 6; ++n) {
        Integer dm = fermat_quotient(m, p), dn = fermat_quotient(n, p);
        Integer mp, np;
        mpz_pow_ui(mp.get_mpz_t(), Integer(m).get_mpz_t(), p);
        mpz_pow_ui(np.get_mpz_t(), Integer(n).get_mpz_t(), p);
        CHECK(fermat_quotient(m * n, p) == mp * dn + np * dm + Integer(p) * dm * dn);
      }
    }
  }
}

TEST_CASE("binomial series coefficients of (1+u)^(1/2)") {
  CHECK(binomial_half(0) == Rational(1));
  CHECK(binomial_half(1) == Rational(1, 2));
  CHECK(binomial_half(2) == Rational(-1, 8));
  CHECK(binomial_half(3) == Rational(1, 16));
}

TEST_CASE("cyclotomic scalars") {
  auto i4 = CyclotomicNumber::zeta(4);
  CHECK(i4 * i4 == CyclotomicNumber(4, -1));
  auto z3 = CyclotomicNumber::zeta(3);
  // zeta_3^2 = -1 - zeta_3
  CHECK(z3 * z3 == CyclotomicNumber(3, -1) - z3);
  CHECK(z3.frobenius(5) == z3 * z3);
  CHECK(z3.frobenius(7) == z3);
  CHECK(CyclotomicNumber(1, Rational(3, 4)).frobenius(5) == CyclotomicNumber(1, Rational(3, 4)));
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(CyclotomicNumber(1, 5).is_rational());
}
