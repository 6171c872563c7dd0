#pragma once

#include <cstdint>
#include <vector>

#include "sc/exact.hpp"

namespace sc {

/// Deterministic primality test. Trial division below 2^16, strong
/// probable-prime tests with a fixed base set above (correct far beyond
/// the sweep range of this tool).
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending.
std::vector<long> primes_in_range(long lo, long hi);

/// Legendre symbol (-1/p): +1 iff p ≡ 1 (mod 4). p must be an odd prime.
int legendre_minus_one(long p);

/// Fermat quotient q_p(a) = (a^(p-1) - 1)/p, an exact integer.
/// Requires gcd(a, p) = 1.
Int fermat_quotient(const Int& a, long p);

/// Euler number E_n (generating function 2/(e^x + e^-x)); 0 for odd n.
Int euler_number(long n);

/// E_n mod p, computed by running the defining recurrence modulo p.
Residue euler_number_mod(long n, long p);

/// Generalized harmonic number H_n(r) = sum_{k=1}^{n} 1/k^r.
Rational harmonic(long n, long r);

/// Alternating variant H_n(-r) = sum_{k=1}^{n} (-1)^k / k^r.
Rational harmonic_alt(long n, long r);

/// H(1,1;n) = sum_{1 <= i < j <= n} 1/(ij).
Rational double_harmonic(long n);

}  // namespace sc
