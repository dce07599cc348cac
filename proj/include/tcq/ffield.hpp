#pragma once

#include <string_view>
#include <vector>

#include "tcq/bigint.hpp"

namespace tcq {

// Polynomial over F_q as a coefficient vector, constant term first. A monic
// degree-n polynomial has size n+1 with back() == 1. All coefficients are
// kept reduced to [0, q).
using Poly = std::vector<Int>;

// The prime field F_q. Immutable after construction; every operation is
// pure, so a context can be shared freely.
class FieldCtx {
 public:
  // MathDomainError unless q is prime.
  explicit FieldCtx(Int q);

  const Int& q() const { return q_; }

  Int reduce(const Int& x) const;
  Int add(const Int& x, const Int& y) const;
  Int sub(const Int& x, const Int& y) const;
  Int mul(const Int& x, const Int& y) const;
  Int neg(const Int& x) const;
  // ZeroInverse on 0.
  Int inv(const Int& x) const;
  // UndefinedPower on 0^0; e must be nonnegative.
  Int pow(const Int& x, const Int& e) const;

  bool operator==(const FieldCtx& other) const { return q_ == other.q_; }

 private:
  Int q_;
};

// Element of an extension field: the coefficient vector of its polynomial
// residue, constant term first, length equal to the extension degree.
struct ExtElement {
  std::vector<Int> coeffs;

  bool operator==(const ExtElement&) const = default;
};

// F_{q^n} presented as F_q[X]/(modulus) for a monic irreducible modulus of
// degree n >= 1.
class ExtFieldCtx {
 public:
  // MathDomainError if the modulus is not monic irreducible of degree >= 1.
  ExtFieldCtx(FieldCtx base, Poly modulus);

  const FieldCtx& base() const { return base_; }
  const Poly& modulus() const { return modulus_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size()) - 1; }
  // q^n
  Int card() const;

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement from_base(const Int& c) const;
  // X^i with i < degree.
  ExtElement monomial(unsigned i) const;

  bool is_zero(const ExtElement& x) const;
  ExtElement add(const ExtElement& x, const ExtElement& y) const;
  ExtElement sub(const ExtElement& x, const ExtElement& y) const;
  ExtElement neg(const ExtElement& x) const;
  ExtElement mul(const ExtElement& x, const ExtElement& y) const;
  ExtElement scale(const ExtElement& x, const Int& c) const;
  // ZeroInverse on 0.
  ExtElement inv(const ExtElement& x) const;
  // UndefinedPower on 0^0; e must be nonnegative.
  ExtElement pow(const ExtElement& x, const Int& e) const;

  // Same q and same modulus.
  bool same_field(const ExtFieldCtx& other) const;

 private:
  void check_element(const ExtElement& x) const;

  FieldCtx base_;
  Poly modulus_;
};

// True iff the monic polynomial f is irreducible over the base field.
// Uses gcd(X^{q^d} - X, f) = 1 for all d <= deg(f)/2.
bool is_irreducible(const FieldCtx& base, const Poly& f);

// Monic irreducible polynomial of the given degree, found by rejection
// sampling from a stream derived from (q, degree, seed). Deterministic.
Poly irreducible_gen(const FieldCtx& base, unsigned degree, std::string_view seed);

// f evaluated at a point of an extension field (Horner).
ExtElement eval_poly(const ExtFieldCtx& field, const Poly& f, const ExtElement& at);

// Canonical root in `field` of a monic polynomial f over the base field,
// f irreducible: the root whose coefficient vector is lexicographically
// smallest, comparing the constant term first. Exhaustive scan when the
// field has at most 2^20 elements, equal-degree splitting otherwise; the
// splitting randomness is derived from the inputs, so the result is
// deterministic either way. NoRoot when deg(f) does not divide the
// extension degree.
ExtElement find_root(const ExtFieldCtx& field, const Poly& f);

}  // namespace tcq
