#include "tcq/birational.hpp"

#include <string>
#include <utility>

#include "tcq/errors.hpp"
#include "tcq/numtheory.hpp"
#include "tcq/rng.hpp"

namespace tcq {

namespace {

// x payload index (i + v*j) -> tensor index (i + a*j), i < v.
TensorElement lift_x(const TorusParams& p, const std::vector<Int>& x) {
  TensorElement t = p.ctx.zero();
  for (unsigned j = 0; j < p.b; ++j) {
    for (unsigned i = 0; i < p.v; ++i) t.coeffs[i + p.a * j] = x[i + p.v * j];
  }
  return t;
}

// y payload index (i + a*j), j < u: already the tensor index.
TensorElement lift_y(const TorusParams& p, const std::vector<Int>& y) {
  TensorElement t = p.ctx.zero();
  for (unsigned j = 0; j < p.u; ++j) {
    for (unsigned i = 0; i < p.a; ++i) t.coeffs[i + p.a * j] = y[i + p.a * j];
  }
  return t;
}

bool all_zero(const std::vector<Int>& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

// Scales so the first nonzero coordinate becomes 1. Precondition: not all
// zero.
void normalize_leading(const FieldCtx& k, std::vector<Int>& v) {
  std::size_t lead = 0;
  while (v[lead] == 0) ++lead;
  if (v[lead] == 1) return;
  const Int s = k.inv(v[lead]);
  for (std::size_t i = lead; i < v.size(); ++i) v[i] = k.mul(v[i], s);
}

}  // namespace

std::pair<unsigned, unsigned> bezout_uv(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw MathDomainError("degrees must be positive");
  if (gcd_u(a, b) != 1) {
    throw CoprimeViolation("degrees " + std::to_string(a) + " and " + std::to_string(b) +
                           " are not coprime");
  }
  // Inverse of a mod b by the extended Euclid on signed longs.
  long r0 = b, r1 = a % b;
  long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  long inv = t0 % static_cast<long>(b);
  if (inv < 0) inv += b;
  // Representative of a^{-1} mod b in (0, b].
  unsigned u = inv == 0 ? b : static_cast<unsigned>(inv);
  unsigned long num = static_cast<unsigned long>(a) * b + 1 - static_cast<unsigned long>(u) * a;
  unsigned v = static_cast<unsigned>(num / b);
  return {u, v};
}

TorusParams make_params(const Int& q, unsigned a, unsigned b, std::string_view seed) {
  if (a == 0 || b == 0) throw MathDomainError("degrees must be positive");
  if (gcd_u(a, b) != 1) throw CoprimeViolation("degrees must be coprime");
  FieldCtx base(q);
  ExtFieldCtx field_a(base, irreducible_gen(base, a, subseed(seed, "fA")));
  ExtFieldCtx field_b(base, irreducible_gen(base, b, subseed(seed, "fB")));
  return params_from_ctx(TensorCtx::create(field_a, field_b, seed));
}

TorusParams params_from_ctx(TensorCtx ctx) {
  const unsigned a = ctx.deg_a();
  const unsigned b = ctx.deg_b();
  auto [u, v] = bezout_uv(a, b);
  return TorusParams{std::move(ctx), a, b, u, v};
}

Matrix fiber_matrix(const TorusParams& p, const TensorElement& t) {
  const unsigned a = p.a;
  const unsigned b = p.b;
  const unsigned ab = a * b;
  Matrix m(p.ctx.base(), ab, ab + 1);
  // x columns: coordinate i + a*j of x - y*t picks up x_{i + v*j}.
  for (unsigned j = 0; j < b; ++j) {
    for (unsigned i = 0; i < p.v; ++i) m.set(i + a * j, i + p.v * j, 1);
  }
  // y columns: -(T^i S^j * t) in tensor coordinates.
  const std::size_t off = p.x_len();
  for (unsigned j = 0; j < p.u; ++j) {
    for (unsigned i = 0; i < a; ++i) {
      TensorElement col = p.ctx.mul(p.ctx.monomial(i, j), t);
      for (unsigned r = 0; r < ab; ++r) {
        m.set(r, off + i + a * j, p.ctx.base().neg(col.coeffs[r]));
      }
    }
  }
  return m;
}

CompressedPgl compress_pgl(const TorusParams& p, const TensorElement& t) {
  if (p.ctx.is_zero(t)) throw NonInvertible("cannot compress zero");
  std::vector<std::vector<Int>> kernel = kernel_basis(fiber_matrix(p, t));
  if (kernel.size() != 1) {
    throw OutOfGoodLocus(OutOfGoodLocus::Reason::kKernelDimension, kernel.size(),
                         "fiber kernel has dimension " + std::to_string(kernel.size()));
  }
  std::vector<Int>& w = kernel.front();
  const std::size_t xl = p.x_len();
  if (all_zero(w, 0, xl) || all_zero(w, xl, w.size())) {
    throw OutOfGoodLocus(OutOfGoodLocus::Reason::kZeroPart, 1,
                         "kernel vector has a vanishing x or y block");
  }
  CompressedPgl c;
  c.x.assign(w.begin(), w.begin() + xl);
  c.y.assign(w.begin() + xl, w.end());
  normalize_leading(p.ctx.base(), c.x);
  normalize_leading(p.ctx.base(), c.y);
  return c;
}

TensorElement decompress(const TorusParams& p, const CompressedPgl& c) {
  if (c.x.size() != p.x_len() || c.y.size() != p.y_len()) {
    throw MathDomainError("compressed point has wrong dimensions");
  }
  TensorElement y = lift_y(p, c.y);
  if (p.ctx.is_zero(y)) throw NonInvertible("y part is zero");
  return p.ctx.mul(lift_x(p, c.x), p.ctx.inv(y));
}

namespace {

// B-component i of x (the S-coordinates of T^i), i < v.
ExtElement x_component(const TorusParams& p, const std::vector<Int>& x, unsigned i) {
  ExtElement e = p.ctx.field_b().zero();
  for (unsigned j = 0; j < p.b; ++j) e.coeffs[j] = x[i + p.v * j];
  return e;
}

// A-component j of y, j < u.
ExtElement y_component(const TorusParams& p, const std::vector<Int>& y, unsigned j) {
  ExtElement e = p.ctx.field_a().zero();
  for (unsigned i = 0; i < p.a; ++i) e.coeffs[i] = y[i + p.a * j];
  return e;
}

}  // namespace

CompressedCoset compress_coset(const TorusParams& p, const TensorElement& t) {
  CompressedPgl c = compress_pgl(p, t);
  const ExtFieldCtx& fa = p.ctx.field_a();
  const ExtFieldCtx& fb = p.ctx.field_b();

  ExtElement x0 = x_component(p, c.x, 0);
  ExtElement y0 = y_component(p, c.y, 0);
  if (fb.is_zero(x0) || fa.is_zero(y0)) {
    throw OutOfGoodLocus(OutOfGoodLocus::Reason::kLeadingComponent, 1,
                         "leading tensor component is not invertible");
  }
  ExtElement x0i = fb.inv(x0);
  ExtElement y0i = fa.inv(y0);

  CompressedCoset out;
  out.xr.reserve(p.payload_len());
  for (unsigned i = 1; i < p.v; ++i) {
    ExtElement comp = fb.mul(x_component(p, c.x, i), x0i);
    for (unsigned j = 0; j < p.b; ++j) out.xr.push_back(comp.coeffs[j]);
  }
  for (unsigned j = 1; j < p.u; ++j) {
    ExtElement comp = fa.mul(y_component(p, c.y, j), y0i);
    for (unsigned i = 0; i < p.a; ++i) out.yr.push_back(comp.coeffs[i]);
  }
  return out;
}

CompressedPgl reinflate(const TorusParams& p, const CompressedCoset& c) {
  if (c.xr.size() != static_cast<std::size_t>(p.v - 1) * p.b ||
      c.yr.size() != static_cast<std::size_t>(p.u - 1) * p.a) {
    throw MathDomainError("compressed coset has wrong dimensions");
  }
  CompressedPgl out;
  out.x.assign(p.x_len(), 0);
  out.y.assign(p.y_len(), 0);
  // Dropped components were scaled to 1 (x: T^0 component, y: S^0
  // component).
  out.x[0] = 1;
  for (unsigned i = 1; i < p.v; ++i) {
    for (unsigned j = 0; j < p.b; ++j) out.x[i + p.v * j] = c.xr[(i - 1) * p.b + j];
  }
  out.y[0] = 1;
  for (unsigned j = 1; j < p.u; ++j) {
    for (unsigned i = 0; i < p.a; ++i) out.y[i + p.a * j] = c.yr[(j - 1) * p.a + i];
  }
  return out;
}

TensorElement rerandomize(const TorusParams& p, const TensorElement& t, std::string_view seed) {
  if (p.ctx.is_zero(t)) throw NonInvertible("cannot rerandomize zero");
  SeededRng rng(seed, "rerandomize");
  const Int& q = p.ctx.base().q();
  auto random_unit = [&](const ExtFieldCtx& f) {
    while (true) {
      ExtElement e = f.zero();
      for (unsigned i = 0; i < f.degree(); ++i) e.coeffs[i] = rng.below(q);
      if (!f.is_zero(e)) return e;
    }
  };
  ExtElement alpha = random_unit(p.ctx.field_a());
  ExtElement beta = random_unit(p.ctx.field_b());
  TensorElement h = p.ctx.mul(p.ctx.embed(Side::kA, alpha), p.ctx.embed(Side::kB, beta));
  return p.ctx.mul(h, t);
}

}  // namespace tcq
