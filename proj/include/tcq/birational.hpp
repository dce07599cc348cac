#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "tcq/talgebra.hpp"

namespace tcq {

// Parameters of the torus quotient Q = GL1(A (x) B) / H over F_q, where H is
// the image of the units of A and B. (u, v) is the Bezout pair with
// u*a + v*b = a*b + 1, 0 < u <= b, 0 < v <= a; it fixes the monomial
// subspaces V (x) B = span{T^i S^j : i < v} and A (x) U =
// span{T^i S^j : j < u} that carry the compressed coordinates.
struct TorusParams {
  TensorCtx ctx;
  unsigned a;
  unsigned b;
  unsigned u;
  unsigned v;

  std::size_t x_len() const { return static_cast<std::size_t>(v) * b; }
  std::size_t y_len() const { return static_cast<std::size_t>(a) * u; }
  // a*b + 1 - a - b = (a-1)(b-1)
  std::size_t payload_len() const { return x_len() + y_len() - a - b; }
};

// Point of the graph of the birational parameterization: a pair
// (x, y) in (V (x) B) x (A (x) U) with x = y*t for the represented unit t,
// each side scaled so its first nonzero coordinate is 1. Layout: x has v*b
// coordinates, coefficient of T^i S^j (i < v) at index i + v*j; y has a*u
// coordinates, coefficient of T^i S^j (j < u) at index i + a*j.
struct CompressedPgl {
  std::vector<Int> x;
  std::vector<Int> y;

  bool operator==(const CompressedPgl&) const = default;
};

// Compressed coset representative: the T^0 component of x (an element of B)
// and the S^0 component of y (an element of A) are scaled to 1 and dropped.
// xr holds the remaining v-1 B-components of x, block i-1 (0-based, length
// b) carrying the S-coordinates of the T^i component; yr holds the u-1
// A-components of y likewise. Total length (a-1)(b-1).
struct CompressedCoset {
  std::vector<Int> xr;
  std::vector<Int> yr;

  bool operator==(const CompressedCoset&) const = default;
};

// The Bezout pair (u, v) for coprime degrees: u is the representative of
// a^{-1} mod b in (0, b], v = (a*b + 1 - u*a)/b. CoprimeViolation when
// gcd(a, b) != 1.
std::pair<unsigned, unsigned> bezout_uv(unsigned a, unsigned b);

// Full parameter build: seeded irreducibles for A, B and the big field,
// canonical roots, Bezout pair. Deterministic per (q, a, b, seed).
TorusParams make_params(const Int& q, unsigned a, unsigned b, std::string_view seed);

// Parameters on top of an existing tensor context.
TorusParams params_from_ctx(TensorCtx ctx);

// Matrix of the linear system x = y*t restricted to (V (x) B) (+) (A (x) U):
// a*b rows (tensor coordinates of x - y*t), a*b + 1 columns (the v*b
// x-variables then the a*u y-variables, in payload order). Its kernel is the
// fiber of the graph over t.
Matrix fiber_matrix(const TorusParams& p, const TensorElement& t);

// Inverse of the parameterization at t: solves x = y*t on the graph.
// OutOfGoodLocus when the kernel is not one-dimensional or a kernel vector
// has a vanishing x or y block; NonInvertible when t = 0.
CompressedPgl compress_pgl(const TorusParams& p, const TensorElement& t);

// Forward map: t = x * y^{-1}. NonInvertible when the lifted y is zero.
TensorElement decompress(const TorusParams& p, const CompressedPgl& c);

// Coset-level compression: compress_pgl followed by normalizing the T^0
// component of x and the S^0 component of y to 1 (OutOfGoodLocus,
// kLeadingComponent, when either vanishes) and dropping them. The result
// depends only on the coset t*H, and distinct cosets give distinct payloads.
CompressedCoset compress_coset(const TorusParams& p, const TensorElement& t);

// Re-inserts the two dropped identity components, yielding the canonical
// graph point of the coset.
CompressedPgl reinflate(const TorusParams& p, const CompressedCoset& c);

// t * (alpha (x) beta) for seeded uniform nonzero alpha, beta: a different
// representative of the same coset. Deterministic per (t, seed).
TensorElement rerandomize(const TorusParams& p, const TensorElement& t, std::string_view seed);

}  // namespace tcq
