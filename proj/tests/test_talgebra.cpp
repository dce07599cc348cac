#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tcq/errors.hpp"
#include "tcq/rng.hpp"
#include "tcq/talgebra.hpp"

using namespace tcq;

namespace {

TensorCtx make_f4_f8() {
  FieldCtx k2(2);
  ExtFieldCtx f4(k2, irreducible_gen(k2, 2, "unit-test"));
  ExtFieldCtx f8(k2, irreducible_gen(k2, 3, "unit-test"));
  return TensorCtx::create(f4, f8, "unit-test");
}

TensorElement element_from_index(const TensorCtx& ctx, unsigned long n, unsigned long q) {
  TensorElement t = ctx.zero();
  for (unsigned i = 0; i < ctx.dim(); ++i) {
    t.coeffs[i] = Int(n % q);
    n /= q;
  }
  return t;
}

}  // namespace

TEST_CASE("tensor context over F_4 and F_8") {
  TensorCtx ctx = make_f4_f8();
  CHECK(ctx.dim() == 6);
  CHECK(ctx.deg_a() == 2);
  CHECK(ctx.deg_b() == 3);
  CHECK(ctx.big().degree() == 6);
  // The basis-image table is square of size ab and invertible; from_big is
  // its inverse, so the two transports are mutually inverse.
  CHECK(ctx.basis_table().rows() == 6);
  CHECK(ctx.basis_table().cols() == 6);
  for (unsigned long n = 0; n < 64; ++n) {
    TensorElement t = element_from_index(ctx, n, 2);
    CHECK(ctx.from_big(ctx.to_big(t)) == t);
  }
}

TEST_CASE("to_big is a ring isomorphism (exhaustive at q=2)") {
  TensorCtx ctx = make_f4_f8();
  const ExtFieldCtx& big = ctx.big();
  CHECK(big.is_zero(ctx.to_big(ctx.zero())));
  CHECK(ctx.to_big(ctx.one()) == big.one());
  for (unsigned long n = 0; n < 64; ++n) {
    TensorElement z = element_from_index(ctx, n, 2);
    for (unsigned long m2 = n; m2 < 64; ++m2) {
      TensorElement w = element_from_index(ctx, m2, 2);
      CHECK(ctx.to_big(ctx.mul(z, w)) == big.mul(ctx.to_big(z), ctx.to_big(w)));
      CHECK(ctx.to_big(ctx.add(z, w)) == big.add(ctx.to_big(z), ctx.to_big(w)));
    }
  }
}

TEST_CASE("monomials multiply by adding exponents") {
  TensorCtx ctx = make_f4_f8();
  CHECK(ctx.mul(ctx.monomial(1, 0), ctx.monomial(0, 1)) == ctx.monomial(1, 1));
  CHECK(ctx.mul(ctx.monomial(0, 1), ctx.monomial(0, 1)) == ctx.monomial(0, 2));
  CHECK(ctx.mul(ctx.one(), ctx.monomial(1, 2)) == ctx.monomial(1, 2));
  CHECK_THROWS_AS(ctx.monomial(2, 0), MathDomainError);
}

TEST_CASE("embeddings are multiplicative and land in the right block") {
  TensorCtx ctx = make_f4_f8();
  const ExtFieldCtx& fa = ctx.field_a();
  const ExtFieldCtx& fb = ctx.field_b();
  CHECK(ctx.embed(Side::kA, fa.one()) == ctx.one());
  CHECK(ctx.embed(Side::kB, fb.one()) == ctx.one());
  CHECK(ctx.embed(Side::kA, fa.monomial(1)) == ctx.monomial(1, 0));
  CHECK(ctx.embed(Side::kB, fb.monomial(2)) == ctx.monomial(0, 2));
  for (unsigned long n = 1; n < 4; ++n) {
    for (unsigned long m2 = 1; m2 < 4; ++m2) {
      ExtElement a1{{Int(n % 2), Int(n / 2)}};
      ExtElement a2{{Int(m2 % 2), Int(m2 / 2)}};
      CHECK(ctx.mul(ctx.embed(Side::kA, a1), ctx.embed(Side::kA, a2)) ==
            ctx.embed(Side::kA, fa.mul(a1, a2)));
    }
  }
  CHECK_THROWS_AS(ctx.embed(Side::kA, fb.one()), MathDomainError);
}

TEST_CASE("units invert and satisfy the group order (exhaustive at q=2)") {
  TensorCtx ctx = make_f4_f8();
  int units = 0;
  for (unsigned long n = 1; n < 64; ++n) {
    TensorElement z = element_from_index(ctx, n, 2);
    ++units;
    CHECK(ctx.mul(z, ctx.inv(z)) == ctx.one());
    CHECK(ctx.pow(z, 63) == ctx.one());
  }
  CHECK(units == 63);
  CHECK_THROWS_AS(ctx.inv(ctx.zero()), ZeroInverse);
  CHECK_THROWS_AS(ctx.pow(ctx.zero(), 0), UndefinedPower);
  CHECK(ctx.pow(ctx.zero(), 2) == ctx.zero());
}

TEST_CASE("pow matches repeated multiplication") {
  FieldCtx k3(3);
  ExtFieldCtx fa(k3, irreducible_gen(k3, 2, "t"));
  ExtFieldCtx fb(k3, irreducible_gen(k3, 3, "t"));
  TensorCtx ctx = TensorCtx::create(fa, fb, "t");
  SeededRng rng("talgebra-pow", "test");
  for (int trial = 0; trial < 10; ++trial) {
    TensorElement z = ctx.zero();
    for (unsigned i = 0; i < ctx.dim(); ++i) z.coeffs[i] = rng.below(3);
    if (ctx.is_zero(z)) continue;
    TensorElement acc = ctx.one();
    for (int e = 0; e <= 6; ++e) {
      CHECK(ctx.pow(z, e) == acc);
      acc = ctx.mul(acc, z);
    }
  }
}

TEST_CASE("from_parts validates its inputs") {
  FieldCtx k2(2);
  ExtFieldCtx f4(k2, {1, 1, 1});
  ExtFieldCtx f8(k2, {1, 1, 0, 1});
  ExtFieldCtx f16(k2, {1, 1, 0, 0, 1});
  ExtFieldCtx f64(k2, irreducible_gen(k2, 6, "unit-test"));
  // Non-coprime degrees.
  CHECK_THROWS_AS(TensorCtx::create(f4, f16, "s"), CoprimeViolation);
  // Wrong big degree.
  CHECK_THROWS_AS(
      TensorCtx::from_parts(f4, f8, f16, f16.zero(), f16.zero()), MathDomainError);
  // Claimed roots that are not roots.
  CHECK_THROWS_AS(TensorCtx::from_parts(f4, f8, f64, f64.one(), f64.one()), MathDomainError);
  // Mixed base fields.
  FieldCtx k3(3);
  ExtFieldCtx g9(k3, {1, 0, 1});
  CHECK_THROWS_AS(TensorCtx::create(f4, g9, "s"), MathDomainError);
}

TEST_CASE("create is deterministic per seed") {
  TensorCtx c1 = make_f4_f8();
  TensorCtx c2 = make_f4_f8();
  CHECK(c1.big().modulus() == c2.big().modulus());
  CHECK(c1.root_a() == c2.root_a());
  CHECK(c1.root_b() == c2.root_b());
  FieldCtx k2(2);
  ExtFieldCtx f4(k2, irreducible_gen(k2, 2, "unit-test"));
  ExtFieldCtx f8(k2, irreducible_gen(k2, 3, "unit-test"));
  TensorCtx c3 = TensorCtx::create(f4, f8, "another-seed");
  CHECK(c3.big().modulus() != c1.big().modulus());
}

TEST_CASE("degenerate factor of degree 1") {
  FieldCtx k5(5);
  ExtFieldCtx fa(k5, irreducible_gen(k5, 1, "t"));
  ExtFieldCtx fb(k5, irreducible_gen(k5, 4, "t"));
  TensorCtx ctx = TensorCtx::create(fa, fb, "t");
  CHECK(ctx.dim() == 4);
  TensorElement z = ctx.monomial(0, 2);
  CHECK(ctx.mul(z, ctx.inv(z)) == ctx.one());
}
