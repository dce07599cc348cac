#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tcq/bigint.hpp"
#include "tcq/errors.hpp"
#include "tcq/ffield.hpp"

namespace tcq::detail {

// Field adapters giving PolyRing a uniform element interface.

struct FpK {
  using Elt = Int;
  const FieldCtx& f;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(const Elt& x) const { return x == 0; }
  bool eq(const Elt& x, const Elt& y) const { return x == y; }
  Elt add(const Elt& x, const Elt& y) const { return f.add(x, y); }
  Elt sub(const Elt& x, const Elt& y) const { return f.sub(x, y); }
  Elt mul(const Elt& x, const Elt& y) const { return f.mul(x, y); }
  Elt neg(const Elt& x) const { return f.neg(x); }
  Elt inv(const Elt& x) const { return f.inv(x); }
};

struct ExtK {
  using Elt = ExtElement;
  const ExtFieldCtx& f;

  Elt zero() const { return f.zero(); }
  Elt one() const { return f.one(); }
  bool is_zero(const Elt& x) const { return f.is_zero(x); }
  bool eq(const Elt& x, const Elt& y) const { return x == y; }
  Elt add(const Elt& x, const Elt& y) const { return f.add(x, y); }
  Elt sub(const Elt& x, const Elt& y) const { return f.sub(x, y); }
  Elt mul(const Elt& x, const Elt& y) const { return f.mul(x, y); }
  Elt neg(const Elt& x) const { return f.neg(x); }
  Elt inv(const Elt& x) const { return f.inv(x); }
};

// Dense univariate polynomial arithmetic over an arbitrary field. All
// polynomials are kept stripped: no trailing zero coefficients, the zero
// polynomial is the empty vector.
template <class K>
struct PolyRing {
  using E = typename K::Elt;
  using P = std::vector<E>;

  K k;

  explicit PolyRing(K field) : k(field) {}

  void strip(P& p) const {
    while (!p.empty() && k.is_zero(p.back())) p.pop_back();
  }

  // Degree; -1 for the zero polynomial.
  int deg(const P& p) const { return static_cast<int>(p.size()) - 1; }

  P zero() const { return {}; }
  P one() const { return {k.one()}; }
  P x() const { return {k.zero(), k.one()}; }

  bool eq(const P& a, const P& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!k.eq(a[i], b[i])) return false;
    }
    return true;
  }

  P add(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    strip(r);
    return r;
  }

  P sub(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
    strip(r);
    return r;
  }

  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
      }
    }
    strip(r);
    return r;
  }

  P scale(const P& a, const E& c) const {
    P r(a.size(), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
    strip(r);
    return r;
  }

  P monic(P a) const {
    strip(a);
    if (a.empty()) return a;
    if (k.eq(a.back(), k.one())) return a;
    E lead_inv = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, lead_inv);
    return a;
  }

  void divrem(P a, const P& b, P* quo, P* rem) const {
    if (b.empty()) throw MathDomainError("polynomial division by zero");
    E lead_inv = k.inv(b.back());
    P q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, k.zero());
    while (a.size() >= b.size()) {
      E c = k.mul(a.back(), lead_inv);
      std::size_t shift = a.size() - b.size();
      if (!k.is_zero(c)) {
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
        }
      }
      a.pop_back();
      strip(a);
      if (a.size() < b.size()) break;
    }
    strip(q);
    if (quo) *quo = std::move(q);
    if (rem) *rem = std::move(a);
  }

  P rem(P a, const P& b) const {
    P r;
    divrem(std::move(a), b, nullptr, &r);
    return r;
  }

  // Monic gcd; gcd(0, 0) = 0.
  P gcd(P a, P b) const {
    strip(a);
    strip(b);
    while (!b.empty()) {
      P r = rem(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  P mulmod(const P& a, const P& b, const P& m) const { return rem(mul(a, b), m); }

  P powmod(P base, Int e, const P& m) const {
    if (e < 0) throw MathDomainError("negative polynomial exponent");
    base = rem(std::move(base), m);
    P r = rem(one(), m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
      e >>= 1;
      if (e > 0) base = mulmod(base, base, m);
    }
    return r;
  }

  // Inverse of a mod m; ZeroInverse when a = 0 mod m, MathDomainError when
  // gcd(a, m) != 1.
  P invmod(const P& a, const P& m) const {
    P r0 = m, r1 = rem(a, m);
    if (r1.empty()) throw ZeroInverse("polynomial inverse of zero");
    P t0 = zero(), t1 = one();
    while (!r1.empty()) {
      P q;
      P r2;
      divrem(r0, r1, &q, &r2);
      P t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw MathDomainError("polynomial not invertible modulo m");
    return rem(scale(t0, k.inv(r0[0])), m);
  }

  E eval(const P& a, const E& at) const {
    E r = k.zero();
    for (std::size_t i = a.size(); i-- > 0;) {
      r = k.add(k.mul(r, at), a[i]);
    }
    return r;
  }
};

}  // namespace tcq::detail
