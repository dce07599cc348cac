#pragma once

#include <utility>
#include <vector>

#include "tcq/bigint.hpp"

namespace tcq {

// Primality test. Exact below 2^64 (trial division under 2^20, then
// Miller-Rabin with the deterministic 12-prime base set); above 2^64 it runs
// 128 Miller-Rabin rounds with witnesses drawn from a stream seeded by n
// itself, so the answer is reproducible.
bool is_prime(const Int& n);

// Full factorization as (prime, exponent) pairs, primes ascending. Trial
// division followed by Brent's cycle-finding rho with a fixed iteration
// budget; throws MathDomainError when the budget runs out, in which case the
// caller should supply the factorization externally.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// Distinct prime divisors of a machine-size n, ascending.
std::vector<unsigned> prime_factors(unsigned n);

// Moebius function; 0 when n has a squared prime factor.
int mobius(unsigned n);

unsigned gcd_u(unsigned a, unsigned b);

}  // namespace tcq
