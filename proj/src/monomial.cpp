#include "arithcurv/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace arithcurv {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<std::uint16_t>::max();

std::size_t& term_limit() {
  static std::size_t limit = [] {
    if (const char* env = std::getenv("ARITHCURV_MAX_TERMS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(10'000'000);
  }();
  return limit;
}

}  // namespace

std::size_t max_terms() { return term_limit(); }
void set_max_terms(std::size_t limit) { term_limit() = limit; }

Monomial Monomial::variable(std::size_t var, unsigned exp) {
  Monomial m;
  m.set(var, exp);
  return m;
}

void Monomial::set(std::size_t var, unsigned exp) {
  if (var >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (exp > kMaxExponent) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[var] + exp;
  exps_[var] = static_cast<std::uint16_t>(exp);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned long long e = static_cast<unsigned long long>(exps_[i]) * k;
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ * k;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(x.exps_[i], y.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(x.exps_[i], y.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace arithcurv
