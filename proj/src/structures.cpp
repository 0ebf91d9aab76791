#include "arithcurv/structures.hpp"

#include <stdexcept>

#include "arithcurv/core.hpp"

namespace arithcurv {

namespace {

MPoly var(std::size_t v) { return MPoly::variable(v); }

Integer ipow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

UVW uvw_at(unsigned long p, const MPoly& a, const MPoly& b, const MPoly& c, const MPoly& d) {
  const unsigned e = static_cast<unsigned>(p);
  const MPoly ap = a.pow(e), bp = b.pow(e), cp = c.pow(e), dp = d.pow(e);
  const MPoly den = (ap * dp - bp * cp).pow(2);
  const MPoly s = (a * d + b * c).pow(e);
  const MPoly adbc = ap * dp + bp * cp;
  const MPoly u = adbc * s - (ap * bp * cp * dp).scaled(Rational(ipow(2, p + 1)));
  const MPoly bracket = adbc.scaled(Rational(ipow(2, p))) - s.scaled(2);
  return {RatFunc::fraction(u, den), RatFunc::fraction(bp * dp * bracket, den),
          RatFunc::fraction(ap * cp * bracket, den)};
}

std::string matrix_entry_name(const char* base, std::size_t i, std::size_t j) {
  return std::string(base) + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

PolyMatrix SplitQ::matrix() const {
  PolyMatrix m(n, MPoly(0));
  if (kind == QKind::identity) {
    for (std::size_t i = 0; i < n; ++i) m(i, i) = MPoly(1);
    return m;
  }
  if (n % 2 != 0) throw std::invalid_argument("split forms need even n");
  const std::size_t r = n / 2;
  for (std::size_t i = 0; i < r; ++i) {
    m(i, r + i) = MPoly(1);
    m(r + i, i) = MPoly(kind == QKind::antisymmetric ? -1 : 1);
  }
  return m;
}

std::string SplitQ::name() const {
  switch (kind) {
    case QKind::antisymmetric: return "split-antisym";
    case QKind::symmetric: return "split-sym";
    case QKind::identity: return "identity";
  }
  return "";
}

SplitQ parse_preset(const std::string& name, std::size_t n) {
  SplitQ q{QKind::identity, n};
  if (name == "split-antisym") q.kind = QKind::antisymmetric;
  else if (name == "split-sym") q.kind = QKind::symmetric;
  else if (name != "identity") throw std::invalid_argument("unknown q preset: " + name);
  if (q.kind != QKind::identity && n % 2 != 0) throw std::invalid_argument(name + " needs even n");
  return q;
}

RatFunc beta_p(unsigned long p, const VarTable& vars) {
  const MPoly det = det_x(vars);
  return RatFunc::fraction(det.pow(static_cast<unsigned>(p)), frobenius_subst(det, p, vars));
}

RatMatrix matrix_fp_at(const PolyMatrix& q, unsigned long p, const PolyMatrix& x) {
  if (determinant(q).is_zero()) throw NotInvertible("q is singular");
  const PolyMatrix xp = frob_twist(x, p);
  // phi_p fixes the integer matrix q.
  const PolyMatrix lhs = xp.transpose() * q * xp;
  const PolyMatrix rhs = frob_twist(x.transpose() * q * x, p);
  return inverse(to_ratmatrix(lhs)) * to_ratmatrix(rhs);
}

RatMatrix matrix_fp(const PolyMatrix& q, unsigned long p, const VarTable& vars) {
  return matrix_fp_at(q, p, variable_matrix(vars.n()));
}

MPoly g_p(const PolyMatrix& q, unsigned long p, const VarTable& vars) {
  const PolyMatrix x = variable_matrix(vars.n());
  const MPoly det = determinant(x);
  return det * frobenius_subst(det, p, vars) * determinant(frob_twist(x.transpose() * q * x, p));
}

RatFunc jor(const RatMatrix& b) {
  const std::size_t n = b.size();
  RatMatrix j(n * n);
  const Rational half(1, 2);
  // Column (k,l) holds the image of the matrix unit E_kl.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t col = k * n + l;
      for (std::size_t c = 0; c < n; ++c) j(k * n + c, col) += b(l, c).scaled(half);
      for (std::size_t r = 0; r < n; ++r) j(r * n + l, col) += b(r, k).scaled(half);
    }
  return determinant(j);
}

UVW uvw(unsigned long p, const VarTable& vars) {
  if (vars.n() != 2) throw std::invalid_argument("u, v, w are defined for n = 2");
  return uvw_at(p, var(vars.entry(0, 0)), var(vars.entry(0, 1)), var(vars.entry(1, 0)), var(vars.entry(1, 1)));
}

RatFunc char_disc(const RatMatrix& m) {
  if (m.size() != 2) throw std::invalid_argument("char_disc expects a 2x2 matrix");
  const RatFunc tr = m(0, 0) + m(1, 1);
  const RatFunc det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return tr * tr - det.scaled(4);
}

bool jerry_disc_check(unsigned long p, const VarTable& vars, const Rational* c4) {
  const UVW c = uvw(p, vars);
  const MPoly a = var(vars.entry(0, 0)), b = var(vars.entry(0, 1)), cc = var(vars.entry(1, 0)),
              d = var(vars.entry(1, 1));
  const unsigned e = static_cast<unsigned>(p);
  const Rational k = c4 ? *c4 : Rational(ipow(4, p));
  const MPoly num = (a * d + b * cc).pow(2 * e) - (a * b * cc * d).pow(e).scaled(k);
  const MPoly den = (a.pow(e) * d.pow(e) - b.pow(e) * cc.pow(e)).pow(2);
  const RatFunc lhs = (c.u * c.u - c.v * c.w).scaled(16);
  return lhs == RatFunc::fraction(num.scaled(16), den);
}

bool fprime_identity_check(unsigned long p, const VarTable& vars) {
  const MPoly s = var(vars.s());
  const unsigned e = static_cast<unsigned>(p);
  const Rational four_p(ipow(4, p));
  const MPoly f = (s + MPoly(1)).pow(2 * e) - s.pow(e).scaled(four_p);
  const MPoly lhs = (s + MPoly(1)) * f.derivative(vars.s()) - f.scaled(Rational(2 * static_cast<long>(p)));
  const MPoly rhs = s.pow(e - 1).scaled(four_p * static_cast<long>(p)) * (s - MPoly(1));
  return lhs == rhs;
}

Correspondence build_canonical(unsigned long p, const VarTable& vars) {
  const AlgebraPtr e = QuotAlgebra::base();
  const PolyMatrix x = variable_matrix(vars.n());
  Correspondence g;
  g.algebra = e;
  g.phi_images = frob_twist(x, p).map([&e](const MPoly& f) { return e->scalar(RatFunc(f)); });
  g.label = "bar" + std::to_string(p);
  g.prime = p;
  return g;
}

Correspondence build_antisym_gl2(unsigned long p, const VarTable& vars, unsigned beta_power) {
  const AlgebraPtr e = QuotAlgebra::base();
  const RatFunc beta = beta_p(p, vars).pow(static_cast<int>(beta_power));
  const AlgebraPtr f = e->adjoin("t" + std::to_string(p), {e->scalar(-beta), e->zero()});
  const AlgElem t = f->generator(0);
  Correspondence g;
  g.algebra = f;
  g.phi_images = frob_twist(variable_matrix(vars.n()), p).map([&t](const MPoly& m) { return t.times(RatFunc(m)); });
  g.label = std::to_string(p);
  g.prime = p;
  return g;
}

AlgElem sym_tau_inverse(const Correspondence& sym, const UVW& c) {
  const AlgElem t = sym.algebra->generator(0);
  const AlgElem tinv = (t.times(c.u.scaled(4)) - t.pow(3)).times((c.v * c.w).scaled(4).inverse());
  if (!(t * tinv == sym.algebra->one())) throw std::logic_error("closed-form inverse of tau failed");
  return tinv;
}

Correspondence build_sym_gl2(unsigned long p, const VarTable& vars) {
  if (vars.n() != 2) throw std::invalid_argument("the quartic structure is defined for n = 2");
  const UVW c = uvw(p, vars);
  const AlgebraPtr e = QuotAlgebra::base();
  const AlgebraPtr f =
      e->adjoin("t" + std::to_string(p), {e->scalar((c.v * c.w).scaled(4)), e->zero(), e->scalar(-c.u.scaled(4)), e->zero()});
  Correspondence g;
  g.algebra = f;
  g.label = std::to_string(p);
  g.prime = p;
  const AlgElem t = f->generator(0);
  const AlgElem tinv = sym_tau_inverse(g, c);
  const AlgElem alpha = t.scaled(Rational(1, 2));
  const AlgElem beta = tinv.times(c.v);
  const AlgElem gamma = tinv.times(c.w);
  const PolyMatrix xp = frob_twist(variable_matrix(2), p);
  auto lin = [](const MPoly& k1, const AlgElem& y1, const MPoly& k2, const AlgElem& y2) {
    return y1.times(RatFunc(k1)) + y2.times(RatFunc(k2));
  };
  g.phi_images = Matrix<AlgElem>(2);
  g.phi_images(0, 0) = lin(xp(0, 0), alpha, xp(0, 1), gamma);
  g.phi_images(0, 1) = lin(xp(0, 0), beta, xp(0, 1), alpha);
  g.phi_images(1, 0) = lin(xp(1, 0), alpha, xp(1, 1), gamma);
  g.phi_images(1, 1) = lin(xp(1, 0), beta, xp(1, 1), alpha);
  return g;
}

CpPresentation general_cp_presentation(const SplitQ& q, unsigned long p, const VarTable& vars) {
  CpPresentation c;
  c.n = vars.n();
  c.p = p;
  c.q = q.name();
  const PolyMatrix qm = q.matrix();
  c.fp = matrix_fp(qm, p, vars);
  c.gp = g_p(qm, p, vars);
  const std::size_t n = c.n;

  bool scalar = true;
  for (std::size_t i = 0; i < n && scalar; ++i)
    for (std::size_t j = 0; j < n && scalar; ++j)
      if (i != j ? !c.fp(i, j).is_zero() : !(c.fp(i, i) == c.fp(0, 0))) scalar = false;
  if (scalar) c.scalar = c.fp(0, 0);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string rel;
      for (std::size_t k = 0; k < n; ++k)
        rel += (k ? " + " : "") + matrix_entry_name("y", i, k) + "*" + matrix_entry_name("y", k, j);
      const std::string f = to_string(c.fp(i, j), vars);
      if (f != "0") rel += " - (" + f + ")";
      c.relations.push_back(rel);
    }
  c.inverted = {to_string(c.gp, vars), "det(y+1)", "jor(y)"};
  return c;
}

nlohmann::json to_json(const CpPresentation& c, const VarTable& vars) {
  nlohmann::json j = {{"n", c.n}, {"p", c.p}, {"q", c.q}, {"relations", c.relations}, {"inverted", c.inverted}};
  if (c.scalar) j["scalar_relation"] = "t^2 - (" + to_string(*c.scalar, vars) + ")";
  return j;
}

RatFunc char_poly(const RatMatrix& m, const VarTable& vars) {
  RatMatrix a = m.map([](const RatFunc& f) { return -f; });
  const RatFunc s(MPoly::variable(vars.s()));
  for (std::size_t i = 0; i < m.size(); ++i) a(i, i) += s;
  return determinant(a);
}

bool block_reduction_check(unsigned long p) {
  const VarTable vars(4);
  // x~ = w x reorders the rows as (0, 2, 1, 3); x~ is block diagonal.
  const std::size_t perm[4] = {0, 2, 1, 3};
  PolyMatrix xt(4, MPoly(0));
  for (std::size_t l = 0; l < 2; ++l)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) xt(2 * l + i, 2 * l + j) = var(vars.entry(2 * l + i, 2 * l + j));
  PolyMatrix x(4, MPoly(0));
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t j = 0; j < 4; ++j) x(perm[k], j) = xt(k, j);

  const RatMatrix f = matrix_fp_at(SplitQ{QKind::symmetric, 4}.matrix(), p, x);
  const RatFunc lhs = char_poly(f, vars);

  const RatFunc s(MPoly::variable(vars.s()));
  RatFunc rhs(1);
  for (std::size_t l = 0; l < 2; ++l) {
    const std::size_t o = 2 * l;
    const UVW c = uvw_at(p, var(vars.entry(o, o)), var(vars.entry(o, o + 1)), var(vars.entry(o + 1, o)),
                         var(vars.entry(o + 1, o + 1)));
    rhs *= s * s - c.u.scaled(2) * s + c.u * c.u - c.v * c.w;
  }
  return lhs == rhs;
}

}  // namespace arithcurv
