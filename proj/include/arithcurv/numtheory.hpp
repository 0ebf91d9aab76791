#ifndef ARITHCURV_NUMTHEORY_HPP
#define ARITHCURV_NUMTHEORY_HPP

#include "arithcurv/poly.hpp"

namespace arithcurv {

bool is_prime(unsigned long p);

/// Legendre symbol (q|p) for an odd prime p via Euler's criterion:
/// q^((p-1)/2) mod p mapped to {-1, 0, 1}.
int legendre_symbol(const Integer& q, unsigned long p);

/// Fermat quotient (n - n^p)/p, the p-derivation of n in Z.
Integer fermat_quotient(const Integer& n, unsigned long p);

/// Binomial coefficient C(1/2, i) as an exact rational.
Rational binomial_half(unsigned i);

}  // namespace arithcurv

#endif  // ARITHCURV_NUMTHEORY_HPP
