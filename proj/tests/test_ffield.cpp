#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tcq/errors.hpp"
#include "tcq/ffield.hpp"
#include "tcq/rng.hpp"

using namespace tcq;

TEST_CASE("prime field arithmetic mod 7") {
  FieldCtx k(7);
  CHECK(k.add(5, 4) == 2);
  CHECK(k.sub(2, 5) == 4);
  CHECK(k.mul(3, 5) == 1);
  CHECK(k.neg(0) == 0);
  CHECK(k.neg(3) == 4);
  CHECK(k.reduce(-1) == 6);
  CHECK(k.reduce(700) == 0);
  CHECK(k.inv(3) == 5);
  CHECK(k.pow(3, 6) == 1);
  CHECK(k.pow(0, 5) == 0);
}

TEST_CASE("prime field rejects bad inputs") {
  CHECK_THROWS_AS(FieldCtx(1), MathDomainError);
  CHECK_THROWS_AS(FieldCtx(10), MathDomainError);
  FieldCtx k(5);
  CHECK_THROWS_AS(k.inv(0), ZeroInverse);
  CHECK_THROWS_AS(k.pow(0, 0), UndefinedPower);
  CHECK_THROWS_AS(k.pow(2, -1), MathDomainError);
}

TEST_CASE("Fermat little theorem sampled over F_13") {
  FieldCtx k(13);
  for (int a = 1; a < 13; ++a) CHECK(k.pow(a, 12) == 1);
}

TEST_CASE("F_4 multiplication table") {
  FieldCtx k2(2);
  ExtFieldCtx f4(k2, {1, 1, 1});  // X^2 + X + 1
  CHECK(f4.degree() == 2);
  CHECK(f4.card() == 4);
  ExtElement x = f4.monomial(1);
  // x^2 = x + 1
  CHECK(f4.mul(x, x) == ExtElement{{1, 1}});
  // x^3 = 1
  CHECK(f4.mul(f4.mul(x, x), x) == f4.one());
  CHECK(f4.inv(x) == ExtElement{{1, 1}});
}

TEST_CASE("F_9 arithmetic with modulus X^2 + 1") {
  FieldCtx k3(3);
  ExtFieldCtx f9(k3, {1, 0, 1});
  ExtElement x = f9.monomial(1);
  // x^2 = -1 = 2
  CHECK(f9.mul(x, x) == f9.from_base(2));
  // Unit group has order 8.
  std::vector<Int> c{0, 0};
  int units = 0;
  for (int i = 0; i < 9; ++i) {
    c = {Int(i % 3), Int(i / 3)};
    ExtElement e{c};
    if (f9.is_zero(e)) continue;
    ++units;
    CHECK(f9.pow(e, 8) == f9.one());
    CHECK(f9.mul(e, f9.inv(e)) == f9.one());
  }
  CHECK(units == 8);
}

TEST_CASE("extension context validates the modulus") {
  FieldCtx k2(2);
  // X^2 + 1 = (X+1)^2 over F_2.
  CHECK_THROWS_AS(ExtFieldCtx(k2, Poly{1, 0, 1}), MathDomainError);
  // Not monic.
  FieldCtx k5(5);
  CHECK_THROWS_AS(ExtFieldCtx(k5, Poly{1, 0, 2}), MathDomainError);
  // Degree 0.
  CHECK_THROWS_AS(ExtFieldCtx(k5, Poly{1}), MathDomainError);
  // Unreduced coefficient.
  CHECK_THROWS_AS(ExtFieldCtx(k5, Poly{7, 0, 1}), MathDomainError);
}

TEST_CASE("irreducibility over F_2 and F_3") {
  FieldCtx k2(2), k3(3);
  CHECK(is_irreducible(k2, {1, 1, 1}));
  CHECK_FALSE(is_irreducible(k2, {1, 0, 1}));
  CHECK(is_irreducible(k2, {1, 1, 0, 1}));
  CHECK(is_irreducible(k2, {1, 0, 1, 1}));
  // (X+1)(X^2+1) = X^3 + X^2 + X + 1
  CHECK_FALSE(is_irreducible(k2, {1, 1, 1, 1}));
  CHECK(is_irreducible(k3, {1, 0, 1}));
  // X^2 - 1
  CHECK_FALSE(is_irreducible(k3, {2, 0, 1}));
  // Linear polynomials are irreducible.
  CHECK(is_irreducible(k3, {2, 1}));
}

TEST_CASE("irreducible_gen is deterministic and correct") {
  FieldCtx k2(2);
  // Unique monic irreducible quadratic over F_2.
  CHECK(irreducible_gen(k2, 2, "anything") == Poly{1, 1, 1});
  FieldCtx k5(5);
  for (unsigned d = 1; d <= 8; ++d) {
    Poly f = irreducible_gen(k5, d, "seed");
    CHECK(f.size() == d + 1);
    CHECK(f.back() == 1);
    CHECK(is_irreducible(k5, f));
    CHECK(irreducible_gen(k5, d, "seed") == f);
  }
  CHECK(irreducible_gen(k5, 6, "seed") != irreducible_gen(k5, 6, "other"));
  CHECK_THROWS_AS(irreducible_gen(k5, 0, "s"), MathDomainError);
}

TEST_CASE("polynomial evaluation in an extension") {
  FieldCtx k3(3);
  ExtFieldCtx f9(k3, {1, 0, 1});
  ExtElement x = f9.monomial(1);
  // f = X^2 + 2X + 1 at x: x^2 + 2x + 1 = 2 + 2x + 1 = 2x
  CHECK(eval_poly(f9, {1, 2, 1}, x) == f9.scale(x, 2));
  CHECK(eval_poly(f9, {}, x) == f9.zero());
  CHECK(eval_poly(f9, {2}, x) == f9.from_base(2));
}

TEST_CASE("find_root: linear and scan paths") {
  FieldCtx k7(7);
  ExtFieldCtx big(k7, irreducible_gen(k7, 2, "t"));
  // X + 2 has root -2 = 5.
  CHECK(find_root(big, {2, 1}) == big.from_base(5));

  // Scan path: F_64 = F_2[Y]/(fBig), root of the quadratic X^2+X+1.
  FieldCtx k2(2);
  ExtFieldCtx f64(k2, irreducible_gen(k2, 6, "t"));
  Poly f{1, 1, 1};
  ExtElement r = find_root(f64, f);
  CHECK(f64.is_zero(eval_poly(f64, f, r)));
  // Lexicographically minimal among all roots, by exhaustion.
  std::vector<Int> c(6, 0);
  bool found_smaller = false;
  for (int n = 0; n < 64; ++n) {
    for (int i = 0; i < 6; ++i) c[i] = (n >> i) & 1;
    ExtElement e{c};
    if (!f64.is_zero(eval_poly(f64, f, e))) continue;
    if (std::lexicographical_compare(e.coeffs.begin(), e.coeffs.end(), r.coeffs.begin(),
                                     r.coeffs.end())) {
      found_smaller = true;
    }
  }
  CHECK_FALSE(found_smaller);
}

TEST_CASE("find_root: splitting path is canonical") {
  FieldCtx k(1009);
  ExtFieldCtx big(k, irreducible_gen(k, 3, "big"));  // card ~ 2^30
  Poly f = irreducible_gen(k, 3, "f");
  ExtElement r = find_root(big, f);
  CHECK(big.is_zero(eval_poly(big, f, r)));
  CHECK(find_root(big, f) == r);
  // All roots are Frobenius conjugates r^(q^i); the returned one must be
  // lexicographically least among them.
  ExtElement c1 = big.pow(r, 1009);
  ExtElement c2 = big.pow(c1, 1009);
  for (const ExtElement& other : {c1, c2}) {
    CHECK(big.is_zero(eval_poly(big, f, other)));
    CHECK_FALSE(std::lexicographical_compare(other.coeffs.begin(), other.coeffs.end(),
                                             r.coeffs.begin(), r.coeffs.end()));
  }
}

TEST_CASE("find_root rejects impossible degrees") {
  FieldCtx k2(2);
  ExtFieldCtx f8(k2, irreducible_gen(k2, 3, "t"));
  CHECK_THROWS_AS(find_root(f8, Poly{1, 1, 1}), NoRoot);  // 2 does not divide 3
}

TEST_CASE("extension power edge cases") {
  FieldCtx k3(3);
  ExtFieldCtx f9(k3, {1, 0, 1});
  CHECK_THROWS_AS(f9.pow(f9.zero(), 0), UndefinedPower);
  CHECK_THROWS_AS(f9.inv(f9.zero()), ZeroInverse);
  CHECK(f9.pow(f9.zero(), 3) == f9.zero());
  CHECK(f9.pow(f9.monomial(1), 0) == f9.one());
}

TEST_CASE("seeded rng rejects bad bounds and is reproducible") {
  SeededRng a("seed", "domain"), b("seed", "domain"), c("seed", "other");
  CHECK(a.next_u64() == b.next_u64());
  bool differs = false;
  for (int i = 0; i < 8; ++i) differs = differs || (a.next_u64() != c.next_u64());
  CHECK(differs);
  CHECK_THROWS_AS(a.below(0), MathDomainError);
  for (int i = 0; i < 100; ++i) {
    Int r = a.below(97);
    CHECK(r >= 0);
    CHECK(r < 97);
    CHECK(a.nonzero_below(5) != 0);
  }
}
