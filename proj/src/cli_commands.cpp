#include <string>
#include <vector>

#include "tcq/cli.hpp"
#include "tcq/errors.hpp"
#include "tcq/numtheory.hpp"
#include "tcq/rng.hpp"

namespace tcq::cli {

namespace {

// Distinct primes of q_order: supplied and verified, or factored here.
std::vector<Int> certified_primes(const Int& q_order, const std::vector<Int>* supplied) {
  std::vector<Int> primes;
  if (supplied) {
    Int rest = q_order;
    for (const Int& p : *supplied) {
      if (!is_prime(p)) {
        throw MathDomainError("supplied factor " + p.get_str() + " is not prime");
      }
      bool divides = false;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        divides = true;
      }
      if (divides) primes.push_back(p);
    }
    if (rest != 1) {
      throw MathDomainError("supplied factorization does not cover the quotient order");
    }
  } else {
    for (const auto& pe : factorize(q_order)) primes.push_back(pe.first);
  }
  return primes;
}

}  // namespace

ParamFileData generate_params(const Int& q, unsigned a, unsigned b, std::string_view seed_hex,
                              const std::vector<Int>* q_order_primes) {
  const std::string seed = seed_bytes_from_hex(seed_hex);
  TorusParams params = make_params(q, a, b, seed);
  const SubgroupOrders o = orders(q, a, b);
  std::vector<Int> primes;
  if (o.q_order > 1) primes = certified_primes(o.q_order, q_order_primes);

  // A unit generates the quotient iff its image survives every maximal
  // subgroup, i.e. t^{q_order/p} stays outside H for each prime p.
  SeededRng rng(seed, "generator");
  TensorElement gen = params.ctx.zero();
  bool found = false;
  for (int attempt = 0; attempt < 4096 && !found; ++attempt) {
    TensorElement cand = params.ctx.zero();
    for (unsigned i = 0; i < params.ctx.dim(); ++i) cand.coeffs[i] = rng.below(q);
    if (params.ctx.is_zero(cand)) continue;
    found = true;
    for (const Int& p : primes) {
      if (h_membership(params, params.ctx.pow(cand, o.q_order / p))) {
        found = false;
        break;
      }
    }
    if (found) gen = cand;
  }
  if (!found) throw MathDomainError("no generator found within the sampling budget");

  ParamFileData out;
  out.q = q;
  out.a = a;
  out.b = b;
  out.seed_hex = std::string(seed_hex);
  out.f_a = params.ctx.field_a().modulus();
  out.f_b = params.ctx.field_b().modulus();
  out.f_big = params.ctx.big().modulus();
  out.root_a = params.ctx.root_a();
  out.root_b = params.ctx.root_b();
  out.u = params.u;
  out.v = params.v;
  out.generator = gen;
  return out;
}

CompressedCoset compress_with_retries(const TorusParams& p, const TensorElement& t,
                                      unsigned retries) {
  try {
    return compress_coset(p, t);
  } catch (const OutOfGoodLocus&) {
    if (retries == 0) throw;
  }
  const std::string base_seed = encode_vec(t.coeffs);
  for (unsigned k = 1;; ++k) {
    TensorElement cand = rerandomize(p, t, subseed(base_seed, "retry-" + std::to_string(k)));
    try {
      return compress_coset(p, cand);
    } catch (const OutOfGoodLocus&) {
      if (k >= retries) throw;
    }
  }
}

Int dh_secret_from_seed(const TorusParams& p, std::string_view seed) {
  const SubgroupOrders o = orders(p.ctx.base().q(), p.a, p.b);
  if (o.q_order <= 1) return 1;
  SeededRng rng(seed, "dh-secret");
  return rng.below(o.q_order - 1) + 1;
}

DhKeyPair dh_keygen(const TorusParams& p, const TensorElement& generator, std::string_view seed,
                    unsigned retries) {
  DhKeyPair kp;
  kp.secret = dh_secret_from_seed(p, seed);
  kp.public_value = compress_with_retries(p, p.ctx.pow(generator, kp.secret), retries);
  return kp;
}

CompressedCoset dh_derive(const TorusParams& p, const Int& secret, const CompressedCoset& peer,
                          unsigned retries) {
  if (secret < 1) throw MathDomainError("secret must be >= 1");
  TensorElement t = decompress(p, reinflate(p, peer));
  return compress_with_retries(p, p.ctx.pow(t, secret), retries);
}

}  // namespace tcq::cli
