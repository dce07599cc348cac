#include "tcq/talgebra.hpp"

#include <algorithm>
#include <utility>

#include "tcq/errors.hpp"
#include "tcq/numtheory.hpp"
#include "tcq/rng.hpp"

namespace tcq {

TensorCtx::TensorCtx(ExtFieldCtx field_a, ExtFieldCtx field_b, ExtFieldCtx big, ExtElement root_a,
                     ExtElement root_b, Matrix to_big, Matrix from_big)
    : field_a_(std::move(field_a)),
      field_b_(std::move(field_b)),
      big_(std::move(big)),
      root_a_(std::move(root_a)),
      root_b_(std::move(root_b)),
      to_big_(std::move(to_big)),
      from_big_(std::move(from_big)) {}

TensorCtx TensorCtx::create(const ExtFieldCtx& field_a, const ExtFieldCtx& field_b,
                            std::string_view seed) {
  if (!(field_a.base() == field_b.base())) {
    throw MathDomainError("tensor factors live over different base fields");
  }
  const unsigned a = field_a.degree();
  const unsigned b = field_b.degree();
  if (gcd_u(a, b) != 1) throw CoprimeViolation("tensor factor degrees must be coprime");
  ExtFieldCtx big(field_a.base(), irreducible_gen(field_a.base(), a * b, subseed(seed, "fBig")));
  ExtElement root_a = find_root(big, field_a.modulus());
  ExtElement root_b = find_root(big, field_b.modulus());
  return from_parts(field_a, field_b, std::move(big), std::move(root_a), std::move(root_b));
}

TensorCtx TensorCtx::from_parts(ExtFieldCtx field_a, ExtFieldCtx field_b, ExtFieldCtx big,
                                ExtElement root_a, ExtElement root_b) {
  if (!(field_a.base() == field_b.base()) || !(field_a.base() == big.base())) {
    throw MathDomainError("tensor factors live over different base fields");
  }
  const unsigned a = field_a.degree();
  const unsigned b = field_b.degree();
  if (gcd_u(a, b) != 1) throw CoprimeViolation("tensor factor degrees must be coprime");
  if (big.degree() != a * b) throw MathDomainError("big field degree must be a*b");
  if (!big.is_zero(eval_poly(big, field_a.modulus(), root_a))) {
    throw MathDomainError("root_a is not a root of fA in the big field");
  }
  if (!big.is_zero(eval_poly(big, field_b.modulus(), root_b))) {
    throw MathDomainError("root_b is not a root of fB in the big field");
  }

  const unsigned ab = a * b;
  Matrix table(big.base(), ab, ab);
  std::vector<ExtElement> pow_a(a, big.one());
  for (unsigned i = 1; i < a; ++i) pow_a[i] = big.mul(pow_a[i - 1], root_a);
  std::vector<ExtElement> pow_b(b, big.one());
  for (unsigned j = 1; j < b; ++j) pow_b[j] = big.mul(pow_b[j - 1], root_b);
  for (unsigned j = 0; j < b; ++j) {
    for (unsigned i = 0; i < a; ++i) {
      ExtElement img = big.mul(pow_a[i], pow_b[j]);
      for (unsigned r = 0; r < ab; ++r) table.set(r, i + a * j, img.coeffs[r]);
    }
  }
  std::optional<Matrix> inv = inverse(table);
  if (!inv) throw MathDomainError("tensor basis images are linearly dependent");
  return TensorCtx(std::move(field_a), std::move(field_b), std::move(big), std::move(root_a),
                   std::move(root_b), std::move(table), std::move(*inv));
}

void TensorCtx::check_element(const TensorElement& z) const {
  if (z.coeffs.size() != dim()) throw MathDomainError("tensor element has wrong dimension");
}

TensorElement TensorCtx::zero() const { return TensorElement{std::vector<Int>(dim(), 0)}; }

TensorElement TensorCtx::one() const {
  TensorElement r = zero();
  r.coeffs[0] = 1;
  return r;
}

TensorElement TensorCtx::monomial(unsigned i, unsigned j) const {
  if (i >= deg_a() || j >= deg_b()) throw MathDomainError("tensor monomial out of range");
  TensorElement r = zero();
  r.coeffs[i + deg_a() * j] = 1;
  return r;
}

bool TensorCtx::is_zero(const TensorElement& z) const {
  check_element(z);
  return std::all_of(z.coeffs.begin(), z.coeffs.end(), [](const Int& c) { return c == 0; });
}

TensorElement TensorCtx::add(const TensorElement& z, const TensorElement& w) const {
  check_element(z);
  check_element(w);
  TensorElement r = zero();
  for (unsigned i = 0; i < dim(); ++i) r.coeffs[i] = base().add(z.coeffs[i], w.coeffs[i]);
  return r;
}

TensorElement TensorCtx::sub(const TensorElement& z, const TensorElement& w) const {
  check_element(z);
  check_element(w);
  TensorElement r = zero();
  for (unsigned i = 0; i < dim(); ++i) r.coeffs[i] = base().sub(z.coeffs[i], w.coeffs[i]);
  return r;
}

TensorElement TensorCtx::neg(const TensorElement& z) const {
  check_element(z);
  TensorElement r = zero();
  for (unsigned i = 0; i < dim(); ++i) r.coeffs[i] = base().neg(z.coeffs[i]);
  return r;
}

TensorElement TensorCtx::scale(const TensorElement& z, const Int& c) const {
  check_element(z);
  Int cr = base().reduce(c);
  TensorElement r = zero();
  for (unsigned i = 0; i < dim(); ++i) r.coeffs[i] = base().mul(z.coeffs[i], cr);
  return r;
}

TensorElement TensorCtx::mul(const TensorElement& z, const TensorElement& w) const {
  check_element(z);
  check_element(w);
  const unsigned a = deg_a();
  const unsigned b = deg_b();
  // View both factors as polynomials in S of degree < b with coefficients
  // in A, convolve, then reduce mod fB; fB has base-field coefficients, so
  // the reduction only needs scalar multiples.
  auto comp = [&](const TensorElement& t, unsigned j) {
    ExtElement e = field_a_.zero();
    for (unsigned i = 0; i < a; ++i) e.coeffs[i] = t.coeffs[i + a * j];
    return e;
  };
  std::vector<ExtElement> prod(2 * b - 1, field_a_.zero());
  for (unsigned j = 0; j < b; ++j) {
    ExtElement zj = comp(z, j);
    if (field_a_.is_zero(zj)) continue;
    for (unsigned l = 0; l < b; ++l) {
      prod[j + l] = field_a_.add(prod[j + l], field_a_.mul(zj, comp(w, l)));
    }
  }
  const Poly& fb = field_b_.modulus();
  for (unsigned idx = 2 * b - 2; idx >= b && b >= 2; --idx) {
    ExtElement c = prod[idx];
    if (field_a_.is_zero(c)) continue;
    prod[idx] = field_a_.zero();
    for (unsigned j = 0; j < b; ++j) {
      if (fb[j] == 0) continue;
      prod[idx - b + j] = field_a_.sub(prod[idx - b + j], field_a_.scale(c, fb[j]));
    }
  }
  TensorElement r = zero();
  for (unsigned j = 0; j < b; ++j) {
    for (unsigned i = 0; i < a; ++i) r.coeffs[i + a * j] = prod[j].coeffs[i];
  }
  return r;
}

TensorElement TensorCtx::inv(const TensorElement& z) const {
  check_element(z);
  if (is_zero(z)) throw ZeroInverse("inverse of zero in the tensor algebra");
  return from_big(big_.inv(to_big(z)));
}

TensorElement TensorCtx::pow(const TensorElement& z, const Int& e) const {
  check_element(z);
  if (is_zero(z) && e == 0) throw UndefinedPower("0^0 in the tensor algebra");
  return from_big(big_.pow(to_big(z), e));
}

ExtElement TensorCtx::to_big(const TensorElement& z) const {
  check_element(z);
  return ExtElement{to_big_.mul_vec(z.coeffs)};
}

TensorElement TensorCtx::from_big(const ExtElement& w) const {
  if (w.coeffs.size() != dim()) throw MathDomainError("big-field element has wrong dimension");
  return TensorElement{from_big_.mul_vec(w.coeffs)};
}

TensorElement TensorCtx::embed(Side side, const ExtElement& x) const {
  TensorElement r = zero();
  if (side == Side::kA) {
    if (x.coeffs.size() != deg_a()) throw MathDomainError("embed: element not in A");
    for (unsigned i = 0; i < deg_a(); ++i) r.coeffs[i] = x.coeffs[i];
  } else {
    if (x.coeffs.size() != deg_b()) throw MathDomainError("embed: element not in B");
    for (unsigned j = 0; j < deg_b(); ++j) r.coeffs[deg_a() * j] = x.coeffs[j];
  }
  return r;
}

}  // namespace tcq
