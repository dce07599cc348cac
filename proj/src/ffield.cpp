#include "tcq/ffield.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "polyring.hpp"
#include "tcq/errors.hpp"
#include "tcq/numtheory.hpp"
#include "tcq/rng.hpp"

namespace tcq {

namespace {

using detail::ExtK;
using detail::FpK;
using detail::PolyRing;

std::string poly_str(const Poly& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f[i].get_str();
  }
  return s;
}

// Validates a monic polynomial with reduced coefficients; returns degree.
unsigned check_monic(const FieldCtx& base, const Poly& f) {
  if (f.size() < 2) throw MathDomainError("polynomial must have degree >= 1");
  for (const Int& c : f) {
    if (c < 0 || c >= base.q()) throw MathDomainError("polynomial coefficient out of range");
  }
  if (f.back() != 1) throw MathDomainError("polynomial must be monic");
  return static_cast<unsigned>(f.size()) - 1;
}

}  // namespace

FieldCtx::FieldCtx(Int q) : q_(std::move(q)) {
  if (!is_prime(q_)) throw MathDomainError("field modulus " + q_.get_str() + " is not prime");
}

Int FieldCtx::reduce(const Int& x) const {
  Int r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), q_.get_mpz_t());
  return r;
}

Int FieldCtx::add(const Int& x, const Int& y) const {
  Int r = x + y;
  if (r >= q_) r -= q_;
  return r;
}

Int FieldCtx::sub(const Int& x, const Int& y) const {
  Int r = x - y;
  if (r < 0) r += q_;
  return r;
}

Int FieldCtx::mul(const Int& x, const Int& y) const { return x * y % q_; }

Int FieldCtx::neg(const Int& x) const { return x == 0 ? Int(0) : Int(q_ - x); }

Int FieldCtx::inv(const Int& x) const {
  if (x == 0) throw ZeroInverse("inverse of zero in F_q");
  Int r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), q_.get_mpz_t()) == 0) {
    throw ZeroInverse("element not invertible mod q");
  }
  return r;
}

Int FieldCtx::pow(const Int& x, const Int& e) const {
  if (e < 0) throw MathDomainError("negative exponent");
  if (x == 0 && e == 0) throw UndefinedPower("0^0 in F_q");
  Int r;
  mpz_powm(r.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), q_.get_mpz_t());
  return r;
}

ExtFieldCtx::ExtFieldCtx(FieldCtx base, Poly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  check_monic(base_, modulus_);
  if (!is_irreducible(base_, modulus_)) {
    throw MathDomainError("extension modulus " + poly_str(modulus_) + " is reducible over F_" +
                          base_.q().get_str());
  }
}

Int ExtFieldCtx::card() const {
  Int c;
  mpz_pow_ui(c.get_mpz_t(), base_.q().get_mpz_t(), degree());
  return c;
}

ExtElement ExtFieldCtx::zero() const { return ExtElement{std::vector<Int>(degree(), 0)}; }

ExtElement ExtFieldCtx::one() const { return from_base(1); }

ExtElement ExtFieldCtx::from_base(const Int& c) const {
  ExtElement r = zero();
  r.coeffs[0] = base_.reduce(c);
  return r;
}

ExtElement ExtFieldCtx::monomial(unsigned i) const {
  if (i >= degree()) throw MathDomainError("monomial exponent out of range");
  ExtElement r = zero();
  r.coeffs[i] = 1;
  return r;
}

void ExtFieldCtx::check_element(const ExtElement& x) const {
  if (x.coeffs.size() != degree()) throw MathDomainError("element has wrong dimension");
}

bool ExtFieldCtx::is_zero(const ExtElement& x) const {
  check_element(x);
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](const Int& c) { return c == 0; });
}

ExtElement ExtFieldCtx::add(const ExtElement& x, const ExtElement& y) const {
  check_element(x);
  check_element(y);
  ExtElement r = zero();
  for (unsigned i = 0; i < degree(); ++i) r.coeffs[i] = base_.add(x.coeffs[i], y.coeffs[i]);
  return r;
}

ExtElement ExtFieldCtx::sub(const ExtElement& x, const ExtElement& y) const {
  check_element(x);
  check_element(y);
  ExtElement r = zero();
  for (unsigned i = 0; i < degree(); ++i) r.coeffs[i] = base_.sub(x.coeffs[i], y.coeffs[i]);
  return r;
}

ExtElement ExtFieldCtx::neg(const ExtElement& x) const {
  check_element(x);
  ExtElement r = zero();
  for (unsigned i = 0; i < degree(); ++i) r.coeffs[i] = base_.neg(x.coeffs[i]);
  return r;
}

ExtElement ExtFieldCtx::mul(const ExtElement& x, const ExtElement& y) const {
  check_element(x);
  check_element(y);
  const unsigned n = degree();
  std::vector<Int> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (y.coeffs[j] == 0) continue;
      prod[i + j] = base_.add(prod[i + j], base_.mul(x.coeffs[i], y.coeffs[j]));
    }
  }
  // Reduce by the monic modulus, highest term first.
  for (unsigned i = 2 * n - 2; i >= n; --i) {
    const Int c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < n; ++j) {
      prod[i - n + j] = base_.sub(prod[i - n + j], base_.mul(c, modulus_[j]));
    }
  }
  prod.resize(n);
  return ExtElement{std::move(prod)};
}

ExtElement ExtFieldCtx::scale(const ExtElement& x, const Int& c) const {
  check_element(x);
  Int cr = base_.reduce(c);
  ExtElement r = zero();
  for (unsigned i = 0; i < degree(); ++i) r.coeffs[i] = base_.mul(x.coeffs[i], cr);
  return r;
}

ExtElement ExtFieldCtx::inv(const ExtElement& x) const {
  check_element(x);
  if (is_zero(x)) throw ZeroInverse("inverse of zero in extension field");
  PolyRing<FpK> ring{FpK{base_}};
  Poly xp = x.coeffs;
  ring.strip(xp);
  Poly r = ring.invmod(xp, modulus_);
  r.resize(degree(), 0);
  return ExtElement{std::move(r)};
}

ExtElement ExtFieldCtx::pow(const ExtElement& x, const Int& e) const {
  check_element(x);
  if (e < 0) throw MathDomainError("negative exponent");
  if (is_zero(x)) {
    if (e == 0) throw UndefinedPower("0^0 in extension field");
    return zero();
  }
  ExtElement r = one();
  ExtElement b = x;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
  }
  return r;
}

bool ExtFieldCtx::same_field(const ExtFieldCtx& other) const {
  return base_ == other.base_ && modulus_ == other.modulus_;
}

bool is_irreducible(const FieldCtx& base, const Poly& f) {
  const unsigned n = check_monic(base, f);
  if (n == 1) return true;
  PolyRing<FpK> ring{FpK{base}};
  Poly r = ring.x();
  for (unsigned d = 1; d <= n / 2; ++d) {
    r = ring.powmod(std::move(r), base.q(), f);  // X^{q^d} mod f
    Poly g = ring.gcd(ring.sub(r, ring.x()), f);
    if (ring.deg(g) != 0) return false;
  }
  return true;
}

Poly irreducible_gen(const FieldCtx& base, unsigned degree, std::string_view seed) {
  if (degree == 0) throw MathDomainError("irreducible_gen needs degree >= 1");
  SeededRng rng(seed, "irreducible|" + std::to_string(degree) + "|" + base.q().get_str());
  while (true) {
    Poly f(degree + 1);
    f[degree] = 1;
    for (unsigned i = 0; i < degree; ++i) f[i] = rng.below(base.q());
    if (is_irreducible(base, f)) return f;
  }
}

ExtElement eval_poly(const ExtFieldCtx& field, const Poly& f, const ExtElement& at) {
  ExtElement r = field.zero();
  for (std::size_t i = f.size(); i-- > 0;) {
    r = field.mul(r, at);
    r.coeffs[0] = field.base().add(r.coeffs[0], field.base().reduce(f[i]));
  }
  return r;
}

namespace {

// Lexicographic order on coefficient vectors, constant term most significant.
bool lex_less(const ExtElement& x, const ExtElement& y) {
  return std::lexicographical_compare(x.coeffs.begin(), x.coeffs.end(), y.coeffs.begin(),
                                      y.coeffs.end());
}

using ExtPoly = std::vector<ExtElement>;

ExtElement find_root_scan(const ExtFieldCtx& field, const Poly& f) {
  const unsigned n = field.degree();
  const Int& q = field.base().q();
  ExtElement cand = field.zero();
  while (true) {
    if (field.is_zero(eval_poly(field, f, cand))) return cand;
    // Odometer with the carry running toward the constant term: visits
    // elements in lexicographic order.
    unsigned pos = n;
    while (pos > 0) {
      --pos;
      cand.coeffs[pos] += 1;
      if (cand.coeffs[pos] < q) break;
      cand.coeffs[pos] = 0;
      if (pos == 0) throw NoRoot("polynomial has no root in the field");
    }
  }
}

ExtElement find_root_split(const ExtFieldCtx& field, const Poly& f) {
  PolyRing<ExtK> ring{ExtK{field}};
  const unsigned n = field.degree();
  const Int& q = field.base().q();

  ExtPoly g;
  g.reserve(f.size());
  for (const Int& c : f) g.push_back(field.from_base(c));
  ring.strip(g);

  // Randomness is a pure function of the inputs, so the returned root is a
  // canonical value.
  SeededRng rng(q.get_str() + "|" + poly_str(field.modulus()) + "|" + poly_str(f), "find-root");
  auto random_elt = [&]() {
    ExtElement e = field.zero();
    for (unsigned i = 0; i < n; ++i) e.coeffs[i] = rng.below(q);
    return e;
  };

  std::vector<ExtElement> roots;
  std::vector<ExtPoly> stack{std::move(g)};
  const Int half = (field.card() - 1) / 2;
  while (!stack.empty()) {
    ExtPoly cur = std::move(stack.back());
    stack.pop_back();
    if (ring.deg(cur) == 1) {
      roots.push_back(field.neg(cur[0]));
      continue;
    }
    while (true) {
      ExtPoly h(static_cast<std::size_t>(ring.deg(cur)), field.zero());
      for (auto& c : h) c = random_elt();
      ring.strip(h);
      if (h.empty()) continue;
      ExtPoly s = ring.gcd(h, cur);
      if (ring.deg(s) <= 0) {
        if (q == 2) {
          // Char 2: trace map sum_{i < n} h^{2^i} mod cur splits.
          ExtPoly acc = ring.rem(h, cur);
          ExtPoly t = acc;
          for (unsigned i = 1; i < n; ++i) {
            t = ring.mulmod(t, t, cur);
            acc = ring.add(acc, t);
          }
          s = ring.gcd(acc, cur);
        } else {
          ExtPoly r = ring.powmod(h, half, cur);
          s = ring.gcd(ring.sub(r, ring.one()), cur);
        }
      }
      if (ring.deg(s) > 0 && ring.deg(s) < ring.deg(cur)) {
        ExtPoly rest;
        ring.divrem(cur, s, &rest, nullptr);
        stack.push_back(std::move(s));
        stack.push_back(std::move(rest));
        break;
      }
    }
  }
  ExtElement best = roots.front();
  for (const ExtElement& r : roots) {
    if (lex_less(r, best)) best = r;
  }
  return best;
}

}  // namespace

ExtElement find_root(const ExtFieldCtx& field, const Poly& f) {
  const unsigned m = check_monic(field.base(), f);
  if (field.degree() % m != 0) {
    throw NoRoot("degree " + std::to_string(m) + " does not divide the extension degree");
  }
  if (m == 1) return field.from_base(field.base().neg(f[0]));
  if (field.card() <= (Int(1) << 20)) return find_root_scan(field, f);
  return find_root_split(field, f);
}

}  // namespace tcq
