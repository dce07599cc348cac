#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tcq/errors.hpp"
#include "tcq/quotient.hpp"
#include "tcq/rng.hpp"

using namespace tcq;

namespace {

TensorElement random_unit(const TorusParams& p, SeededRng& rng) {
  TensorElement t = p.ctx.zero();
  do {
    for (unsigned i = 0; i < p.ctx.dim(); ++i) t.coeffs[i] = rng.below(p.ctx.base().q());
  } while (p.ctx.is_zero(t));
  return t;
}

}  // namespace

TEST_CASE("subgroup orders: frozen small values") {
  SubgroupOrders o = orders(2, 2, 3);
  CHECK(o.h_order == 21);
  CHECK(o.q_order == 3);
  o = orders(3, 2, 3);
  CHECK(o.h_order == 104);
  CHECK(o.q_order == 7);
  // 2^15 - 1 = 7 * 31 * 151.
  o = orders(2, 3, 5);
  CHECK(o.h_order == 217);
  CHECK(o.q_order == 151);
}

TEST_CASE("subgroup orders multiply to the unit group order") {
  for (unsigned long q : {2ul, 3ul, 5ul, 1009ul}) {
    for (auto [a, b] : {std::pair{1u, 2u}, std::pair{2u, 3u}, std::pair{3u, 4u},
                        std::pair{2u, 5u}, std::pair{3u, 5u}}) {
      SubgroupOrders o = orders(Int(q), a, b);
      Int qab;
      mpz_pow_ui(qab.get_mpz_t(), Int(q).get_mpz_t(), a * b);
      CHECK(o.h_order * o.q_order == qab - 1);
      CHECK(o.h_order >= 1);
      CHECK(o.q_order >= 1);
    }
  }
  CHECK_THROWS_AS(orders(4, 2, 4), CoprimeViolation);
  CHECK_THROWS_AS(orders(1, 2, 3), MathDomainError);
}

TEST_CASE("H contains exactly the products of embedded units") {
  TorusParams p = make_params(3, 2, 3, "hmem");
  const ExtFieldCtx& fa = p.ctx.field_a();
  const ExtFieldCtx& fb = p.ctx.field_b();
  // Every alpha (x) beta is a member.
  for (unsigned long na = 1; na < 9; ++na) {
    ExtElement alpha{{Int(na % 3), Int(na / 3)}};
    for (unsigned long nb = 1; nb < 27; ++nb) {
      ExtElement beta{{Int(nb % 3), Int((nb / 3) % 3), Int(nb / 9)}};
      if (fa.is_zero(alpha) || fb.is_zero(beta)) continue;
      TensorElement h =
          p.ctx.mul(p.ctx.embed(Side::kA, alpha), p.ctx.embed(Side::kB, beta));
      CHECK(h_membership(p, h));
    }
  }
  // Frozen count over the whole unit group.
  Int count = 0;
  std::vector<Int> c(p.ctx.dim(), 0);
  auto next = [&]() {
    for (auto& d : c) {
      d += 1;
      if (d < 3) return true;
      d = 0;
    }
    return false;
  };
  while (next()) {
    if (h_membership(p, TensorElement{c})) count += 1;
  }
  CHECK(count == orders(3, 2, 3).h_order);
  CHECK_THROWS_AS(h_membership(p, p.ctx.zero()), ZeroInverse);
}

TEST_CASE("coset equality is an H-invariant equivalence") {
  TorusParams p = make_params(13, 2, 3, "ceq");
  SeededRng rng("ceq", "units");
  for (int trial = 0; trial < 8; ++trial) {
    TensorElement t = random_unit(p, rng);
    TensorElement s = random_unit(p, rng);
    CHECK(coset_eq(p, t, t));
    CHECK(coset_eq(p, t, s) == coset_eq(p, s, t));
    TensorElement th = rerandomize(p, t, "ceq-" + std::to_string(trial));
    CHECK(coset_eq(p, t, th));
    CHECK(coset_eq(p, s, th) == coset_eq(p, s, t));
  }
  CHECK_THROWS_AS(coset_eq(p, p.ctx.one(), p.ctx.zero()), ZeroInverse);
}

TEST_CASE("norms are multiplicative and land in the subfield") {
  FieldCtx k2(2);
  ExtFieldCtx f64(k2, irreducible_gen(k2, 6, "norm"));
  SeededRng rng("norm", "elts");
  auto random_elt = [&]() {
    ExtElement e = f64.zero();
    do {
      for (unsigned i = 0; i < 6; ++i) e.coeffs[i] = rng.below(2);
    } while (f64.is_zero(e));
    return e;
  };
  for (unsigned d : {1u, 2u, 3u, 6u}) {
    ExtElement z = random_elt();
    ExtElement w = random_elt();
    ExtElement nz = norm_to_subfield(f64, d, z);
    CHECK(norm_to_subfield(f64, d, f64.mul(z, w)) ==
          f64.mul(nz, norm_to_subfield(f64, d, w)));
    // Frobenius-fixed: image lies in F_{2^d}.
    Int qd;
    mpz_pow_ui(qd.get_mpz_t(), Int(2).get_mpz_t(), d);
    CHECK(f64.pow(nz, qd) == nz);
    CHECK(norm_to_subfield(f64, d, f64.one()) == f64.one());
  }
  // Norm to the prime field is a base-field element.
  ExtElement n1 = norm_to_subfield(f64, 1, random_elt());
  for (unsigned i = 1; i < 6; ++i) CHECK(n1.coeffs[i] == 0);
  CHECK_THROWS_AS(norm_to_subfield(f64, 4, f64.one()), NotADivisor);
  CHECK_THROWS_AS(norm_to_subfield(f64, 0, f64.one()), NotADivisor);
  CHECK_THROWS_AS(norm_to_subfield(f64, 2, f64.zero()), ZeroInverse);
}

TEST_CASE("torus membership counts match cyclotomic values") {
  for (unsigned long q : {2ul, 3ul}) {
    FieldCtx k((Int(q)));
    ExtFieldCtx big(k, irreducible_gen(k, 6, "tn"));
    Int count = 0;
    std::vector<Int> c(6, 0);
    auto next = [&]() {
      for (auto& d : c) {
        d += 1;
        if (d < q) return true;
        d = 0;
      }
      return false;
    };
    while (next()) {
      if (tn_membership(big, ExtElement{c})) count += 1;
    }
    CHECK(count == cyclotomic_eval(6, Int(q)));
  }
}

TEST_CASE("torus membership requires squarefree degree") {
  FieldCtx k2(2);
  ExtFieldCtx f16(k2, {1, 1, 0, 0, 1});
  CHECK_THROWS_AS(tn_membership(f16, f16.one()), MathDomainError);
  ExtFieldCtx f4(k2, {1, 1, 1});
  CHECK_THROWS_AS(tn_membership(f4, f4.zero()), ZeroInverse);
  // 1 is always in the torus.
  CHECK(tn_membership(f4, f4.one()));
}

TEST_CASE("cyclotomic evaluation against closed forms") {
  CHECK(cyclotomic_eval(1, 7) == 6);
  CHECK(cyclotomic_eval(2, 3) == 4);
  CHECK(cyclotomic_eval(2, 5) == 6);
  CHECK(cyclotomic_eval(2, 7) == 8);
  CHECK(cyclotomic_eval(3, 2) == 7);
  CHECK(cyclotomic_eval(6, 2) == 3);
  CHECK(cyclotomic_eval(6, 3) == 7);
  CHECK(cyclotomic_eval(6, 1009) == 1009 * 1009 - 1009 + 1);
  // Phi_12(q) = q^4 - q^2 + 1.
  CHECK(cyclotomic_eval(12, 2) == 13);
  CHECK(cyclotomic_eval(12, 3) == 73);
  // Phi_15(2) = 2^8 - 2^7 + 2^5 - 2^4 + 2^3 - 2 + 1 = 151.
  CHECK(cyclotomic_eval(15, 2) == 151);
  CHECK_THROWS_AS(cyclotomic_eval(0, 5), MathDomainError);
  CHECK_THROWS_AS(cyclotomic_eval(6, 1), MathDomainError);
}

TEST_CASE("quotient order equals the cyclotomic value when ab is squarefree") {
  // For (a, b) = (2, 3) the quotient of the unit group by H has exactly
  // Phi_6(q) elements.
  for (unsigned long q : {2ul, 3ul, 5ul, 13ul, 1009ul}) {
    CHECK(orders(Int(q), 2, 3).q_order == cyclotomic_eval(6, Int(q)));
  }
  // And for (3, 5), Phi_15(q).
  for (unsigned long q : {2ul, 3ul}) {
    CHECK(orders(Int(q), 3, 5).q_order == cyclotomic_eval(15, Int(q)));
  }
}
