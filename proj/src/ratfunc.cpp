#include "arithcurv/ratfunc.hpp"

#include <algorithm>

namespace arithcurv {

namespace {

MPoly expand(const Monomial& mono, const std::vector<DenFactor>& factors) {
  MPoly r = MPoly::monomial(mono);
  for (const auto& f : factors) r = r * f.poly.pow(f.exp);
  return r;
}

// Inserts poly^exp into a sorted factor list, merging equal factors.
void insert_factor(std::vector<DenFactor>& fs, MPoly poly, unsigned exp) {
  if (exp == 0) return;
  auto it = std::lower_bound(fs.begin(), fs.end(), poly,
                             [](const DenFactor& f, const MPoly& key) { return compare(f.poly, key) < 0; });
  if (it != fs.end() && it->poly == poly) {
    it->exp += exp;
  } else {
    fs.insert(it, DenFactor{std::move(poly), exp});
  }
}

unsigned exponent_of(const std::vector<DenFactor>& fs, const MPoly& poly) {
  for (const auto& f : fs)
    if (f.poly == poly) return f.exp;
  return 0;
}

// Divides `num` by `factor` as often as possible, at most `limit` times.
unsigned strip(MPoly& num, const MPoly& factor, unsigned limit) {
  unsigned k = 0;
  while (k < limit) {
    auto q = exact_divide(num, factor);
    if (!q) break;
    num = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace

RatFunc RatFunc::fraction(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFunc r = from_parts(num, Monomial{}, {DenFactor{den, 1}});
  r.cancel();
  return r;
}

RatFunc RatFunc::from_parts(MPoly num, Monomial mono, std::vector<DenFactor> raw) {
  RatFunc r;
  Rational scalar = 1;
  std::vector<DenFactor> factors;
  for (auto& f : raw) {
    if (f.exp == 0) continue;
    if (f.poly.is_zero()) throw DivisionByZero("zero factor in denominator");
    Monomial m = f.poly.monomial_content();
    MPoly g = m.is_one() ? std::move(f.poly) : f.poly.divided_by_monomial(m);
    mono = mono * m.pow(f.exp);
    Rational lc = g.leading().coeff;
    Rational lc_pow;
    mpz_pow_ui(lc_pow.get_num_mpz_t(), lc.get_num_mpz_t(), f.exp);
    mpz_pow_ui(lc_pow.get_den_mpz_t(), lc.get_den_mpz_t(), f.exp);
    lc_pow.canonicalize();
    scalar *= lc_pow;
    if (g.is_constant()) continue;
    if (lc != 1) g = g.scaled(1 / lc);
    insert_factor(factors, std::move(g), f.exp);
  }
  r.num_ = scalar == 1 ? std::move(num) : num.scaled(1 / scalar);
  r.den_mono_ = mono;
  r.den_factors_ = std::move(factors);
  if (r.num_.is_zero()) {
    r.den_mono_ = Monomial{};
    r.den_factors_.clear();
  }
  return r;
}

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_mono_ = Monomial{};
    den_factors_.clear();
    return;
  }
  if (!den_mono_.is_one()) {
    Monomial g = Monomial::gcd(num_.monomial_content(), den_mono_);
    if (!g.is_one()) {
      num_ = num_.divided_by_monomial(g);
      den_mono_ = den_mono_ / g;
    }
  }
  for (auto& f : den_factors_) f.exp -= strip(num_, f.poly, f.exp);
  std::erase_if(den_factors_, [](const DenFactor& f) { return f.exp == 0; });
}

MPoly RatFunc::den() const { return expand(den_mono_, den_factors_); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  bool same_den = den_mono_ == o.den_mono_ && den_factors_.size() == o.den_factors_.size() &&
                  std::equal(den_factors_.begin(), den_factors_.end(), o.den_factors_.begin(),
                             [](const DenFactor& x, const DenFactor& y) { return x.exp == y.exp && x.poly == y.poly; });
  if (same_den) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  Monomial lmono = Monomial::lcm(den_mono_, o.den_mono_);
  std::vector<DenFactor> lf = den_factors_;
  for (const auto& f : o.den_factors_) {
    unsigned mine = exponent_of(lf, f.poly);
    if (f.exp > mine) insert_factor(lf, f.poly, f.exp - mine);
  }
  auto cofactor = [&](const RatFunc& x) {
    MPoly c = MPoly::monomial(lmono / x.den_mono_);
    for (const auto& f : lf) {
      unsigned have = exponent_of(x.den_factors_, f.poly);
      if (f.exp > have) c = c * f.poly.pow(f.exp - have);
    }
    return c;
  };
  MPoly sum = num_ * cofactor(*this) + o.num_ * cofactor(o);
  num_ = std::move(sum);
  den_mono_ = lmono;
  den_factors_ = std::move(lf);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc{};
  MPoly mine = num_;
  MPoly theirs = o.num_;
  std::vector<DenFactor> my_den = den_factors_;
  std::vector<DenFactor> their_den = o.den_factors_;
  Monomial my_mono = den_mono_;
  Monomial their_mono = o.den_mono_;

  // Cross-cancel before multiplying out.
  for (auto& f : their_den) f.exp -= strip(mine, f.poly, f.exp);
  for (auto& f : my_den) f.exp -= strip(theirs, f.poly, f.exp);
  if (!their_mono.is_one()) {
    Monomial g = Monomial::gcd(mine.monomial_content(), their_mono);
    mine = mine.divided_by_monomial(g);
    their_mono = their_mono / g;
  }
  if (!my_mono.is_one()) {
    Monomial g = Monomial::gcd(theirs.monomial_content(), my_mono);
    theirs = theirs.divided_by_monomial(g);
    my_mono = my_mono / g;
  }

  num_ = mine * theirs;
  den_mono_ = my_mono * their_mono;
  den_factors_.clear();
  for (auto& f : my_den) insert_factor(den_factors_, std::move(f.poly), f.exp);
  for (auto& f : their_den) insert_factor(den_factors_, std::move(f.poly), f.exp);
  return *this;
}

RatFunc RatFunc::inverse_with(std::span<const DenFactor> hints) const {
  if (is_zero()) throw DivisionByZero("inverse of zero in E");
  Monomial m = num_.monomial_content();
  MPoly g = m.is_one() ? num_ : num_.divided_by_monomial(m);
  Rational lc = g.leading().coeff;
  if (lc != 1) g = g.scaled(1 / lc);

  std::vector<DenFactor> factors;
  auto try_split = [&](const MPoly& h) {
    if (g.is_constant() || h.total_degree() > g.total_degree()) return;
    if (exponent_of(factors, h) > 0) return;
    unsigned k = strip(g, h, ~0u);
    if (k > 0) insert_factor(factors, h, k);
  };
  for (const auto& h : hints) try_split(h.poly);
  if (!g.is_constant()) insert_factor(factors, g.scaled(1 / g.leading().coeff), 1);

  RatFunc r;
  r.num_ = expand(den_mono_, den_factors_).scaled(1 / lc);
  r.den_mono_ = m;
  r.den_factors_ = std::move(factors);
  return r;
}

RatFunc RatFunc::inverse() const { return inverse_with(den_factors_); }

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in E");
  std::vector<DenFactor> hints = den_factors_;
  hints.insert(hints.end(), o.den_factors_.begin(), o.den_factors_.end());
  return *this *= o.inverse_with(hints);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return RatFunc(1);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  r.den_mono_ = den_mono_.pow(static_cast<unsigned>(k));
  r.den_factors_ = den_factors_;
  for (auto& f : r.den_factors_) f.exp *= static_cast<unsigned>(k);
  return r;
}

RatFunc RatFunc::scaled(const Rational& c) const {
  if (sgn(c) == 0) return RatFunc{};
  RatFunc r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RatFunc RatFunc::exponent_scaled(std::span<const std::size_t> vars, unsigned k) const {
  Monomial mono = den_mono_;
  for (auto v : vars) mono.set(v, den_mono_[v] * k);
  std::vector<DenFactor> raw;
  raw.reserve(den_factors_.size());
  for (const auto& f : den_factors_) raw.push_back(DenFactor{f.poly.exponent_scaled(vars, k), f.exp});
  return from_parts(num_.exponent_scaled(vars, k), mono, std::move(raw));
}

RatFunc RatFunc::sign_flipped(std::span<const std::size_t> vars) const {
  MPoly num = num_.sign_flipped(vars);
  unsigned odd = 0;
  for (auto v : vars) odd += den_mono_[v];
  if (odd & 1u) num = -num;
  std::vector<DenFactor> raw;
  raw.reserve(den_factors_.size());
  for (const auto& f : den_factors_) raw.push_back(DenFactor{f.poly.sign_flipped(vars), f.exp});
  return from_parts(std::move(num), den_mono_, std::move(raw));
}

RatFunc RatFunc::evaluated(std::size_t var, const Rational& value) const {
  MPoly num = num_.evaluated(var, value);
  std::vector<DenFactor> raw;
  Monomial mono = den_mono_;
  if (mono[var] > 0) {
    raw.push_back(DenFactor{MPoly::variable(var).evaluated(var, value), mono[var]});
    mono.set(var, 0);
  }
  for (const auto& f : den_factors_) {
    MPoly g = f.poly.evaluated(var, value);
    if (g.is_zero()) throw DivisionByZero("denominator vanishes under specialization");
    raw.push_back(DenFactor{std::move(g), f.exp});
  }
  for (const auto& f : raw)
    if (f.poly.is_zero()) throw DivisionByZero("denominator vanishes under specialization");
  RatFunc r = from_parts(std::move(num), mono, std::move(raw));
  r.cancel();
  return r;
}

bool operator==(const RatFunc& x, const RatFunc& y) {
  if (x.den_mono_ == y.den_mono_ && x.den_factors_.size() == y.den_factors_.size() &&
      std::equal(x.den_factors_.begin(), x.den_factors_.end(), y.den_factors_.begin(),
                 [](const DenFactor& a, const DenFactor& b) { return a.exp == b.exp && a.poly == b.poly; }))
    return x.num_ == y.num_;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  // Cross-multiply over the lcm of the factored denominators.
  Monomial lmono = Monomial::lcm(x.den_mono_, y.den_mono_);
  std::vector<DenFactor> lf = x.den_factors_;
  for (const auto& f : y.den_factors_) {
    unsigned mine = exponent_of(lf, f.poly);
    if (f.exp > mine) insert_factor(lf, f.poly, f.exp - mine);
  }
  auto lifted = [&](const RatFunc& r) {
    MPoly c = MPoly::monomial(lmono / r.den_mono_);
    for (const auto& f : lf) {
      unsigned have = exponent_of(r.den_factors_, f.poly);
      if (f.exp > have) c = c * f.poly.pow(f.exp - have);
    }
    return r.num_ * c;
  };
  return lifted(x) == lifted(y);
}

}  // namespace arithcurv
