#include "arithcurv/numtheory.hpp"

#include <stdexcept>

namespace arithcurv {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int legendre_symbol(const Integer& q, unsigned long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol needs an odd prime");
  Integer modulus(p);
  Integer r;
  Integer base = q % modulus;
  if (base < 0) base += modulus;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, modulus.get_mpz_t());
  if (r == 0) return 0;
  if (r == 1) return 1;
  return -1;
}

Integer fermat_quotient(const Integer& n, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("fermat_quotient needs a prime");
  Integer np;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), p);
  Integer diff = n - np;
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), diff.get_mpz_t(), p);
  return q;
}

Rational binomial_half(unsigned i) {
  // C(1/2, i) = prod_{k<i} (1/2 - k) / i!
  Rational c = 1;
  for (unsigned k = 0; k < i; ++k) {
    c *= Rational(1, 2) - Rational(k);
    c /= Rational(k + 1);
  }
  return c;
}

}  // namespace arithcurv
