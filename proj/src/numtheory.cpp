#include "tcq/numtheory.hpp"

#include <algorithm>
#include <map>

#include "tcq/errors.hpp"
#include "tcq/rng.hpp"

namespace tcq {

namespace {

constexpr unsigned long kTrialLimit = 1ul << 20;

bool small_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// One Miller-Rabin round; n odd, n > 3, 2 <= a <= n-2. True = probably prime.
bool mr_round(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < static_cast<long>(kTrialLimit)) return small_prime(n.get_ui());
  // Cheap divisibility screen before Miller-Rabin.
  static const unsigned long kScreen[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                          37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                          83, 89, 97, 101, 103, 107, 109, 113};
  for (unsigned long p : kScreen) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  Int two_64 = Int(1) << 64;
  if (n < two_64) {
    // Deterministic for n < 2^64 with this fixed base set.
    static const unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long b : kBases) {
      if (!mr_round(n, Int(b), d, s)) return false;
    }
    return true;
  }
  SeededRng rng(n.get_str(), "miller-rabin");
  for (int i = 0; i < 128; ++i) {
    Int a = rng.below(n - 3) + 2;
    if (!mr_round(n, a, d, s)) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite
// odd n, or 0 when the iteration budget is exhausted.
Int brent_rho(const Int& n, unsigned long c, unsigned long budget) {
  Int y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  unsigned long spent = 0;
  const unsigned long m = 128;
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = m;
      if (r - k < static_cast<long>(m)) lim = mpz_get_ui(Int(r - k).get_mpz_t());
      for (unsigned long i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        Int diff = x > y ? x - y : y - x;
        q = q * diff % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      spent += lim;
      if (spent > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time.
    do {
      ys = (ys * ys + c) % n;
      Int diff = x > ys ? x - ys : ys - x;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1; c <= 24; ++c) {
    Int g = brent_rho(n, c, 1ul << 22);
    if (g != 0 && g != 1 && g != n) {
      factor_into(g, out);
      factor_into(n / g, out);
      return;
    }
  }
  throw MathDomainError("factorization budget exhausted for " + n.get_str() +
                        "; supply the factorization explicitly");
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
  if (n < 1) throw MathDomainError("factorize needs n >= 1");
  Int m = n;
  std::map<Int, unsigned> acc;
  for (unsigned long p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++acc[Int(p)];
      m /= p;
    }
  }
  factor_into(m, acc);
  return {acc.begin(), acc.end()};
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<unsigned long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(unsigned n) {
  if (n == 0) return 0;
  int sign = 1;
  for (unsigned p = 2; static_cast<unsigned long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

unsigned gcd_u(unsigned a, unsigned b) {
  while (b != 0) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace tcq
