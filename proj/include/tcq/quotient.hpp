#pragma once

#include "tcq/birational.hpp"

namespace tcq {

struct SubgroupOrders {
  Int h_order;  // (q^a - 1)(q^b - 1)/(q - 1)
  Int q_order;  // (q^{ab} - 1)(q - 1)/((q^a - 1)(q^b - 1))
};

// Orders of H and of the quotient Q for coprime a, b. Both divisions are
// exact; gcd(q^a - 1, q^b - 1) = q - 1.
SubgroupOrders orders(const Int& q, unsigned a, unsigned b);

// Whether the unit z lies in H = im(units of A x units of B). H is the
// unique subgroup of the cyclic group GL1(A (x) B) of order h_order, so
// membership is z^{h_order} = 1. ZeroInverse on z = 0.
bool h_membership(const TorusParams& p, const TensorElement& z);

// Whether two units represent the same coset of H, i.e. z1 * z2^{-1} in H.
bool coset_eq(const TorusParams& p, const TensorElement& z1, const TensorElement& z2);

// Norm from F_{q^n} to the subfield F_{q^d}, d | n: z^{(q^n-1)/(q^d-1)}.
// NotADivisor when d does not divide n; ZeroInverse on 0.
ExtElement norm_to_subfield(const ExtFieldCtx& field, unsigned d, const ExtElement& z);

// Membership in the torus T_n(F_q): the kernel of every norm to a maximal
// proper subfield F_{q^{n/p}}, p prime dividing n. Requires squarefree n
// (MathDomainError otherwise); ZeroInverse on 0. |T_n(F_q)| = Phi_n(q).
bool tn_membership(const ExtFieldCtx& field, const ExtElement& z);

// Phi_n(q), the n-th cyclotomic polynomial at q, via the Moebius product
// Phi_n(q) = prod_{d | n} (q^d - 1)^{mu(n/d)}. Requires n >= 1 and q >= 2
// for n > 1.
Int cyclotomic_eval(unsigned n, const Int& q);

}  // namespace tcq
