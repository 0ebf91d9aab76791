#include "arithcurv/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace arithcurv {

namespace {

void check_budget(std::size_t n) {
  if (n > max_terms())
    throw TermLimitExceeded("polynomial exceeds ARITHCURV_MAX_TERMS (" + std::to_string(max_terms()) + " terms)");
}

// Merges two descending term lists; `sign` is applied to y's coefficients.
std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y, int sign) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    auto c = x[i].mono <=> y[j].mono;
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(Term{y[j].mono, sign > 0 ? y[j].coeff : Rational(-y[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(x[i].coeff + y[j].coeff) : Rational(x[i].coeff - y[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{x[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(Term{y[j].mono, sign > 0 ? y[j].coeff : Rational(-y[j].coeff)});
  return out;
}

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, Rational(c)});
}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial{}, c});
}

MPoly MPoly::variable(std::size_t var, unsigned exp) { return monomial(Monomial::variable(var, exp)); }

MPoly MPoly::monomial(const Monomial& m, const Rational& c) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool MPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return g;
}

Rational MPoly::content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Integer MPoly::denominator_lcm() const {
  Integer den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  return den_lcm;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  if (x.is_zero() || y.is_zero()) return MPoly{};
  if (x.size() == 1) return y.times_monomial(x.terms_[0].mono, x.terms_[0].coeff);
  if (y.size() == 1) return x.times_monomial(y.terms_[0].mono, y.terms_[0].coeff);
  const MPoly& small = x.size() <= y.size() ? x : y;
  const MPoly& big = x.size() <= y.size() ? y : x;

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(small.size() * big.size(), 1u << 22));
  Rational prod;
  for (const auto& s : small.terms_) {
    for (const auto& b : big.terms_) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), b.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(s.mono * b.mono, prod);
      if (!inserted) it->second += prod;
    }
    check_budget(acc.size());
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back(Term{m, std::move(c)});
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MPoly r;
  r.terms_ = std::move(terms);
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MPoly{};
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MPoly MPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return MPoly{};
  MPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

MPoly MPoly::divided_by_monomial(const Monomial& m) const {
  MPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw std::logic_error("monomial does not divide polynomial");
    r.terms_.push_back(Term{t.mono / m, t.coeff});
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1);
  if (k == 0) return result;
  if (is_monomial()) {
    Rational c;
    mpz_pow_ui(c.get_num_mpz_t(), terms_[0].coeff.get_num_mpz_t(), k);
    mpz_pow_ui(c.get_den_mpz_t(), terms_[0].coeff.get_den_mpz_t(), k);
    return monomial(terms_[0].mono.pow(k), c);
  }
  MPoly base = *this;
  while (true) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coeff * e});
  }
  // Lowering one exponent preserves the relative order of distinct monomials.
  MPoly r;
  r.terms_ = std::move(out);
  return r;
}

MPoly MPoly::exponent_scaled(std::span<const std::size_t> vars, unsigned k) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    for (auto v : vars) m.set(v, t.mono[v] * k);
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::sign_flipped(std::span<const std::size_t> vars) const {
  MPoly r = *this;
  for (auto& t : r.terms_) {
    unsigned odd = 0;
    for (auto v : vars) odd += t.mono[v];
    if (odd & 1u) t.coeff = -t.coeff;
  }
  return r;
}

MPoly MPoly::evaluated(std::size_t var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    Monomial m = t.mono;
    m.set(var, 0);
    Rational c = t.coeff;
    if (e > 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      c *= pw;
    }
    out.push_back(Term{m, c});
  }
  return from_terms(std::move(out));
}

bool operator==(const MPoly& x, const MPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i)
    if (!(x.terms_[i].mono == y.terms_[i].mono) || x.terms_[i].coeff != y.terms_[i].coeff) return false;
  return true;
}

std::strong_ordering compare(const MPoly& x, const MPoly& y) {
  if (auto c = x.total_degree() <=> y.total_degree(); c != 0) return c;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (auto c = x.terms_[i].mono <=> y.terms_[i].mono; c != 0) return c;
    int cc = cmp(x.terms_[i].coeff, y.terms_[i].coeff);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::optional<MPoly> exact_divide(const MPoly& x, const MPoly& y) {
  if (y.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (x.is_zero()) return MPoly{};
  if (y.is_constant()) return x.scaled(1 / y.constant_value());
  // Leading and trailing monomials of a product are products of those of the factors.
  if (!y.leading().mono.divides(x.leading().mono)) return std::nullopt;
  if (!y.trailing().mono.divides(x.trailing().mono)) return std::nullopt;
  if (y.total_degree() > x.total_degree()) return std::nullopt;
  if (y.size() == 1) {
    const auto& yt = y.leading();
    std::vector<Term> q;
    q.reserve(x.size());
    Rational inv = 1 / yt.coeff;
    for (const auto& t : x.terms()) {
      if (!yt.mono.divides(t.mono)) return std::nullopt;
      q.push_back(Term{t.mono / yt.mono, t.coeff * inv});
    }
    return MPoly::from_terms(std::move(q));
  }

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : x.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lead = y.leading();
  Rational lead_inv = 1 / lead.coeff;
  std::vector<Term> quotient;
  Rational qc, prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.mono.divides(top->first)) return std::nullopt;
    Monomial qm = top->first / lead.mono;
    qc = top->second * lead_inv;
    rem.erase(top);
    for (std::size_t i = 1; i < y.size(); ++i) {
      const Term& t = y.terms()[i];
      mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), t.coeff.get_mpq_t());
      Monomial m = qm * t.mono;
      auto [it, inserted] = rem.try_emplace(m);
      if (inserted) {
        mpq_neg(it->second.get_mpq_t(), prod.get_mpq_t());
      } else {
        it->second -= prod;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    quotient.push_back(Term{qm, qc});
    check_budget(quotient.size());
  }
  // Quotient monomials were produced in decreasing order.
  MPoly q;
  q.terms_ = std::move(quotient);
  return q;
}

}  // namespace arithcurv
