#pragma once

#include <string_view>
#include <vector>

#include "tcq/ffield.hpp"
#include "tcq/linalg.hpp"

namespace tcq {

// Element of the tensor algebra A (x) B over F_q, A = F_{q^a} = F_q[T]/(fA),
// B = F_{q^b} = F_q[S]/(fB). Coordinates in the monomial basis T^i S^j with
// the coefficient of T^i S^j stored flat at index i + a*j (i < a, j < b).
struct TensorElement {
  std::vector<Int> coeffs;

  bool operator==(const TensorElement&) const = default;
};

enum class Side { kA, kB };

// The tensor algebra A (x) B together with a fixed isomorphism onto the big
// field F_{q^{ab}}: T^i S^j maps to rootA^i * rootB^j where rootA, rootB are
// the canonical roots of fA, fB in the big field. Requires gcd(a, b) = 1,
// which makes the algebra a field.
class TensorCtx {
 public:
  // Builds the big field from a seeded irreducible of degree a*b, locates
  // the canonical roots, and tabulates the isomorphism. Deterministic per
  // (fields, seed).
  static TensorCtx create(const ExtFieldCtx& field_a, const ExtFieldCtx& field_b,
                          std::string_view seed);

  // Rebuilds a context from stored parts, re-verifying that root_a, root_b
  // are roots of the respective moduli and that the basis-image table is
  // invertible. MathDomainError on any mismatch, CoprimeViolation when
  // gcd(a, b) != 1.
  static TensorCtx from_parts(ExtFieldCtx field_a, ExtFieldCtx field_b, ExtFieldCtx big,
                              ExtElement root_a, ExtElement root_b);

  const FieldCtx& base() const { return field_a_.base(); }
  const ExtFieldCtx& field_a() const { return field_a_; }
  const ExtFieldCtx& field_b() const { return field_b_; }
  const ExtFieldCtx& big() const { return big_; }
  const ExtElement& root_a() const { return root_a_; }
  const ExtElement& root_b() const { return root_b_; }
  unsigned deg_a() const { return field_a_.degree(); }
  unsigned deg_b() const { return field_b_.degree(); }
  unsigned dim() const { return deg_a() * deg_b(); }

  // Column i + a*j holds the big-field coordinates of rootA^i * rootB^j.
  // Invertible by construction; rank = a*b.
  const Matrix& basis_table() const { return to_big_; }

  TensorElement zero() const;
  TensorElement one() const;
  // T^i S^j.
  TensorElement monomial(unsigned i, unsigned j) const;
  bool is_zero(const TensorElement& z) const;

  TensorElement add(const TensorElement& z, const TensorElement& w) const;
  TensorElement sub(const TensorElement& z, const TensorElement& w) const;
  TensorElement neg(const TensorElement& z) const;
  TensorElement scale(const TensorElement& z, const Int& c) const;
  // Bilinear product in the T^i S^j basis, computed by polynomial
  // multiplication over A followed by reduction mod fB. Agrees with the
  // big-field product through to_big.
  TensorElement mul(const TensorElement& z, const TensorElement& w) const;
  // ZeroInverse on 0.
  TensorElement inv(const TensorElement& z) const;
  // UndefinedPower on 0^0; e must be nonnegative.
  TensorElement pow(const TensorElement& z, const Int& e) const;

  ExtElement to_big(const TensorElement& z) const;
  TensorElement from_big(const ExtElement& w) const;

  // a |-> a (x) 1 respectively b |-> 1 (x) b.
  TensorElement embed(Side side, const ExtElement& x) const;

 private:
  TensorCtx(ExtFieldCtx field_a, ExtFieldCtx field_b, ExtFieldCtx big, ExtElement root_a,
            ExtElement root_b, Matrix to_big, Matrix from_big);

  void check_element(const TensorElement& z) const;

  ExtFieldCtx field_a_;
  ExtFieldCtx field_b_;
  ExtFieldCtx big_;
  ExtElement root_a_;
  ExtElement root_b_;
  Matrix to_big_;
  Matrix from_big_;
};

}  // namespace tcq
