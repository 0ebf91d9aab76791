#include "arithcurv/padic.hpp"

#include "arithcurv/core.hpp"
#include "arithcurv/numtheory.hpp"

namespace arithcurv {

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotInvertible("not a unit modulo " + m.get_str());
  return r;
}

void check_same(const PadicElem& x, const PadicElem& y) {
  if (!x.context() || x.context() != y.context()) throw std::invalid_argument("p-adic context mismatch");
}

PolyMatrix minor(const PolyMatrix& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.size();
  PolyMatrix m(n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

PolyMatrix adjugate(const PolyMatrix& a) {
  const std::size_t n = a.size();
  PolyMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = MPoly(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MPoly c = determinant(minor(a, j, i));
      adj(i, j) = (i + j) % 2 ? -c : c;
    }
  return adj;
}

}  // namespace

Integer Precision::modulus() const {
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, K);
  return m;
}

PadicContext::PadicContext(Precision pr, std::size_t n) : prec(pr), modulus(pr.modulus()), vars(n), det(det_x(vars)) {}

PadicContextPtr make_padic_context(Precision prec, std::size_t n) {
  if (prec.K == 0) throw std::invalid_argument("precision K must be positive");
  if (prec.p == 2 || !is_prime(prec.p)) throw std::invalid_argument("p must be an odd prime");
  return std::make_shared<const PadicContext>(prec, n);
}

Integer reduce_mod(const Rational& c, const Precision& prec) {
  const Integer m = prec.modulus();
  const Integer num = mod_floor(c.get_num(), m);
  if (c.get_den() == 1) return num;
  if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), prec.p)) throw NotInvertible("coefficient is not p-integral");
  return mod_floor(num * mod_inverse(c.get_den(), m), m);
}

MPoly reduce_mod(const MPoly& f, const Precision& prec) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer r = reduce_mod(t.coeff, prec);
    if (r != 0) terms.push_back(Term{t.mono, Rational(r)});
  }
  return MPoly::from_terms(std::move(terms));
}

PadicElem::PadicElem(PadicContextPtr ctx, const MPoly& poly, unsigned det_pow)
    : ctx_(std::move(ctx)), poly_(reduce_mod(poly, ctx_->prec)), det_pow_(det_pow) {}

bool PadicElem::divisible_by_p_power(unsigned k) const {
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), ctx_->prec.p, k);
  for (const auto& t : poly_.terms())
    if (!mpz_divisible_p(t.coeff.get_num_mpz_t(), pk.get_mpz_t())) return false;
  return true;
}

PadicElem PadicElem::operator-() const { return PadicElem(ctx_, -poly_, det_pow_); }

PadicElem PadicElem::with_det_pow(unsigned m) const {
  if (m < det_pow_) throw std::invalid_argument("cannot lower the det power");
  if (m == det_pow_) return *this;
  return PadicElem(ctx_, poly_ * ctx_->det.pow(m - det_pow_), m);
}

PadicElem operator+(const PadicElem& x, const PadicElem& y) {
  check_same(x, y);
  const unsigned m = std::max(x.det_pow_, y.det_pow_);
  return PadicElem(x.ctx_, x.with_det_pow(m).poly_ + y.with_det_pow(m).poly_, m);
}

PadicElem operator-(const PadicElem& x, const PadicElem& y) { return x + (-y); }

PadicElem operator*(const PadicElem& x, const PadicElem& y) {
  check_same(x, y);
  if (x.is_zero() || y.is_zero()) return PadicElem(x.ctx_, MPoly(), 0);
  return PadicElem(x.ctx_, x.poly_ * y.poly_, x.det_pow_ + y.det_pow_);
}

PadicElem PadicElem::scaled(const Rational& c) const { return PadicElem(ctx_, poly_.scaled(c), det_pow_); }

PadicElem PadicElem::normalized() const {
  PadicElem r = *this;
  if (r.poly_.is_zero()) {
    r.det_pow_ = 0;
    return r;
  }
  while (r.det_pow_ > 0) {
    auto q = exact_divide(r.poly_, ctx_->det);
    if (!q || q->denominator_lcm() != 1) break;
    r = PadicElem(ctx_, *q, r.det_pow_ - 1);
  }
  return r;
}

bool operator==(const PadicElem& x, const PadicElem& y) { return (x - y).is_zero(); }

std::string PadicElem::to_string() const {
  std::string s = arithcurv::to_string(poly_, ctx_->vars);
  if (det_pow_ == 0) return s;
  return "(" + s + ") / det^" + std::to_string(det_pow_);
}

PadicElem padic_invert(const PadicElem& e) {
  const auto& ctx = e.context();
  const Precision mod_p{ctx->prec.p, 1};
  const MPoly pbar = reduce_mod(e.poly(), mod_p);
  if (pbar.is_zero()) throw NotInvertible("element vanishes mod p");
  const std::size_t n = ctx->vars.n();
  const unsigned deg = pbar.total_degree();
  if (deg % n != 0) throw NotInvertible("reduction mod p is not a unit times a power of det(x)");
  const unsigned j = static_cast<unsigned>(deg / n);
  const MPoly detj = ctx->det.pow(j);
  // c = lc(pbar) / lc(det^j) mod p
  const Integer p(static_cast<unsigned long>(ctx->prec.p));
  const Integer c =
      mod_floor(reduce_mod(pbar.leading().coeff, mod_p) * mod_inverse(reduce_mod(detj.leading().coeff, mod_p), p), p);
  if (!(reduce_mod(detj.scaled(Rational(c)), mod_p) == pbar))
    throw NotInvertible("reduction mod p is not a unit times a power of det(x)");

  // e.poly = c det^j + p g, so e.poly = c det^j (1 + p h) with h = g / (c det^j).
  const MPoly g = (e.poly() - detj.scaled(Rational(c))).scaled(Rational(1) / Rational(p));
  if (g.denominator_lcm() != 1) throw std::logic_error("padic_invert: non-integral correction");
  const Integer cinv = mod_inverse(c, ctx->modulus);
  const PadicElem ph(ctx, g.scaled(Rational(cinv * p)), j);
  PadicElem term(ctx, MPoly(1));
  PadicElem acc = term;
  for (unsigned i = 1; i < ctx->prec.K; ++i) {
    term = -(term * ph);
    acc = acc + term;
  }
  // e^-1 = det^m / (c det^j) * acc
  const PadicElem front(ctx, ctx->det.pow(e.det_pow()).scaled(Rational(cinv)), j);
  return (front * acc).normalized();
}

PadicMatrix to_padic(const PolyMatrix& m, const PadicContextPtr& ctx) {
  return m.map([&ctx](const MPoly& f) { return PadicElem(ctx, f); });
}

PadicMatrix padic_identity(const PadicContextPtr& ctx) {
  return PadicMatrix::identity(ctx->vars.n(), PadicElem(ctx, MPoly()), PadicElem(ctx, MPoly(1)));
}

PadicMatrix sqrt_half_series(const PadicMatrix& u) {
  const auto& ctx = u(0, 0).context();
  if (ctx->prec.p == 2) throw std::invalid_argument("the half-power series needs odd p");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!u(i, j).divisible_by_p_power(1)) throw std::invalid_argument("series argument is not divisible by p");
  PadicMatrix power = padic_identity(ctx);
  PadicMatrix acc = power;
  for (unsigned i = 1; i < ctx->prec.K; ++i) {
    power = power * u;
    const Rational b = binomial_half(i);
    acc = acc + power.map([&b](const PadicElem& x) { return x.scaled(b); });
  }
  return acc;
}

void check_prime_for_q(const PolyMatrix& q, unsigned long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  const MPoly d = determinant(q);
  if (d.is_zero()) throw NotInvertible("q is singular");
  if (!d.is_constant()) throw std::invalid_argument("q must be an integer matrix");
  const Rational dv = d.constant_value();
  if (mpz_divisible_ui_p(dv.get_num_mpz_t(), p)) throw std::invalid_argument("p divides det(q)");
}

PadicMatrix chern_frobenius(const PolyMatrix& q, const Precision& prec) {
  check_prime_for_q(q, prec.p);
  const PadicContextPtr ctx = make_padic_context(prec, q.size());
  const PolyMatrix x = variable_matrix(q.size());
  const PolyMatrix xp = frob_twist(x, prec.p);
  // phi_p fixes the integer matrix q.
  const PolyMatrix a = xp.transpose() * q * xp;
  const PolyMatrix b = frob_twist(x.transpose() * q * x, prec.p);
  const PadicElem det_inv = padic_invert(PadicElem(ctx, determinant(a)));
  const PadicMatrix a_inv = to_padic(adjugate(a), ctx).map([&det_inv](const PadicElem& e) { return e * det_inv; });
  const PadicMatrix u = a_inv * to_padic(b, ctx) - padic_identity(ctx);
  const PadicMatrix s = sqrt_half_series(u);
  return (to_padic(xp, ctx) * s).map([](const PadicElem& e) { return e.normalized(); });
}

DiagramResult check_chern_diagram(const PolyMatrix& q, const PadicMatrix& phi) {
  const auto& ctx = phi(0, 0).context();
  const PolyMatrix x = variable_matrix(q.size());
  const PadicMatrix lhs = phi.transpose() * to_padic(q, ctx) * phi;
  const PadicMatrix rhs = to_padic(frob_twist(x.transpose() * q * x, ctx->prec.p), ctx);
  DiagramResult r;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      const PadicElem d = lhs(i, j) - rhs(i, j);
      if (!d.is_zero()) {
        r.row = i;
        r.col = j;
        r.witness = d.normalized().to_string();
        return r;
      }
    }
  r.ok = true;
  return r;
}

DiagramResult verify_chern_diagram(const PolyMatrix& q, const Precision& prec) {
  return check_chern_diagram(q, chern_frobenius(q, prec));
}

bool lifts_frobenius(const PadicMatrix& phi) {
  const auto& ctx = phi(0, 0).context();
  const PadicMatrix xp = to_padic(frob_twist(variable_matrix(phi.size()), ctx->prec.p), ctx);
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (!(phi(i, j) - xp(i, j)).divisible_by_p_power(1)) return false;
  return true;
}

RatFunc gl1_chern(const Integer& q, unsigned long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (q == 0 || mpz_divisible_ui_p(q.get_mpz_t(), p)) throw std::invalid_argument("p divides q");
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(), (p - 1) / 2);
  const Integer coeff = power * legendre_symbol(q, p);
  return RatFunc(MPoly::variable(0, static_cast<unsigned>(p)).scaled(Rational(coeff)));
}

PolyMatrix q_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("q must be a non-empty array of rows");
  const std::size_t n = j.size();
  std::vector<std::vector<long>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("q must be square");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("q entries must be integers");
      r.push_back(v.get<long>());
    }
    rows.push_back(std::move(r));
  }
  bool sym = true, anti = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      sym = sym && rows[i][k] == rows[k][i];
      anti = anti && rows[i][k] == -rows[k][i];
    }
  if (!sym && !anti) throw std::invalid_argument("q must satisfy q^t = q or q^t = -q");
  PolyMatrix q = constant_matrix(rows);
  if (determinant(q).is_zero()) throw std::invalid_argument("q is singular");
  return q;
}

}  // namespace arithcurv
