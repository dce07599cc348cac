#include "tcq/quotient.hpp"

#include <string>

#include "tcq/errors.hpp"
#include "tcq/numtheory.hpp"

namespace tcq {

namespace {

Int pow_int(const Int& q, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
  return r;
}

Int exact_div(const Int& num, const Int& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw MathDomainError("expected exact division");
  }
  return num / den;
}

}  // namespace

SubgroupOrders orders(const Int& q, unsigned a, unsigned b) {
  if (q < 2) throw MathDomainError("orders needs q >= 2");
  if (a == 0 || b == 0) throw MathDomainError("degrees must be positive");
  if (gcd_u(a, b) != 1) throw CoprimeViolation("degrees must be coprime");
  const Int qa = pow_int(q, a) - 1;
  const Int qb = pow_int(q, b) - 1;
  const Int qab = pow_int(q, a * b) - 1;
  SubgroupOrders o;
  // gcd(q^a - 1, q^b - 1) = q^{gcd(a,b)} - 1 = q - 1, so both are exact.
  o.h_order = exact_div(qa * qb, q - 1);
  o.q_order = exact_div(qab * (q - 1), qa * qb);
  return o;
}

bool h_membership(const TorusParams& p, const TensorElement& z) {
  if (p.ctx.is_zero(z)) throw ZeroInverse("h_membership of zero");
  const SubgroupOrders o = orders(p.ctx.base().q(), p.a, p.b);
  const ExtFieldCtx& big = p.ctx.big();
  // GL1(A (x) B) is cyclic, so H is its unique subgroup of order h_order
  // and membership is an order condition.
  return big.pow(p.ctx.to_big(z), o.h_order) == big.one();
}

bool coset_eq(const TorusParams& p, const TensorElement& z1, const TensorElement& z2) {
  return h_membership(p, p.ctx.mul(z1, p.ctx.inv(z2)));
}

ExtElement norm_to_subfield(const ExtFieldCtx& field, unsigned d, const ExtElement& z) {
  const unsigned n = field.degree();
  if (d == 0 || n % d != 0) {
    throw NotADivisor("subfield degree " + std::to_string(d) + " does not divide " +
                      std::to_string(n));
  }
  if (field.is_zero(z)) throw ZeroInverse("norm of zero");
  const Int qn = field.card() - 1;
  Int qd;
  mpz_pow_ui(qd.get_mpz_t(), field.base().q().get_mpz_t(), d);
  ExtElement w = field.pow(z, exact_div(qn, qd - 1));
  if (!(field.pow(w, qd) == w)) throw MathDomainError("norm image escaped the subfield");
  return w;
}

bool tn_membership(const ExtFieldCtx& field, const ExtElement& z) {
  if (field.is_zero(z)) throw ZeroInverse("tn_membership of zero");
  const unsigned n = field.degree();
  if (mobius(n) == 0) throw MathDomainError("torus degree must be squarefree");
  for (unsigned p : prime_factors(n)) {
    if (!(norm_to_subfield(field, n / p, z) == field.one())) return false;
  }
  return true;
}

Int cyclotomic_eval(unsigned n, const Int& q) {
  if (n == 0) throw MathDomainError("cyclotomic_eval needs n >= 1");
  if (n > 1 && q < 2) throw MathDomainError("cyclotomic_eval needs q >= 2 for n > 1");
  Int num = 1, den = 1;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    Int qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    if (mu == 1) {
      num *= qd - 1;
    } else {
      den *= qd - 1;
    }
  }
  return exact_div(num, den);
}

}  // namespace tcq
