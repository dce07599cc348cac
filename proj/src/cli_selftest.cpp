#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tcq/cli.hpp"
#include "tcq/errors.hpp"
#include "tcq/rng.hpp"

namespace tcq::cli {

namespace {

constexpr std::string_view kSeed = "tcq-selftest";

// Odometer over coefficient vectors; returns false after wrapping to zero.
bool next_vec(std::vector<Int>& c, const Int& q) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] += 1;
    if (c[i] < q) return true;
    c[i] = 0;
  }
  return false;
}

bool is_scalar_multiple(const TensorCtx& ctx, const TensorElement& d, const TensorElement& t) {
  std::size_t lead = 0;
  while (lead < t.coeffs.size() && t.coeffs[lead] == 0) ++lead;
  if (lead == t.coeffs.size()) return false;
  const Int lambda = ctx.base().mul(d.coeffs[lead], ctx.base().inv(t.coeffs[lead]));
  if (lambda == 0) return false;
  return d == ctx.scale(t, lambda);
}

std::string coset_payload_key(const CompressedCoset& c) {
  std::vector<Int> flat = c.xr;
  flat.insert(flat.end(), c.yr.begin(), c.yr.end());
  return encode_vec(flat);
}

// Exhaustive walk over the unit group of a small parameter set: orders,
// coset partition, good locus of both compression levels, payload
// injectivity and coset invariance.
bool sweep_small(unsigned long q, std::ostringstream& rep) {
  TorusParams p = make_params(Int(q), 2, 3, kSeed);
  const SubgroupOrders o = orders(Int(q), 2, 3);

  Int h_count = 0;
  long pgl_good = 0, coset_good = 0;
  bool exact_ok = true, round_ok = true, inject_ok = true, invar_ok = true;
  std::vector<TensorElement> reps;
  std::map<std::size_t, Int> coset_sizes;
  std::map<std::string, std::size_t> payload_to_coset;
  std::map<std::size_t, std::string> coset_to_payload;

  std::vector<Int> c(p.ctx.dim(), 0);
  while (next_vec(c, p.ctx.base().q())) {
    TensorElement t{c};
    if (h_membership(p, t)) h_count += 1;
    std::size_t id = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (coset_eq(p, t, reps[i])) {
        id = i;
        break;
      }
    }
    if (id == reps.size()) reps.push_back(t);
    coset_sizes[id] += 1;

    try {
      CompressedPgl cp = compress_pgl(p, t);
      ++pgl_good;
      TensorElement d = decompress(p, cp);
      if (q == 2 && !(d == t)) exact_ok = false;
      if (!is_scalar_multiple(p.ctx, d, t)) round_ok = false;
    } catch (const OutOfGoodLocus&) {
    }
    try {
      CompressedCoset cc = compress_coset(p, t);
      ++coset_good;
      const std::string key = coset_payload_key(cc);
      auto [it, fresh] = payload_to_coset.emplace(key, id);
      if (!fresh && it->second != id) inject_ok = false;
      auto [it2, fresh2] = coset_to_payload.emplace(id, key);
      if (!fresh2 && it2->second != key) invar_ok = false;
    } catch (const OutOfGoodLocus&) {
    }
  }

  bool sizes_ok = true;
  for (const auto& [id, size] : coset_sizes) {
    if (size != o.h_order) sizes_ok = false;
  }

  bool identity_failed = false;
  std::size_t identity_dim = 0;
  try {
    compress_pgl(p, p.ctx.one());
  } catch (const OutOfGoodLocus& e) {
    identity_failed = true;
    identity_dim = e.kernel_dim();
  }

  const Int units = p.ctx.big().card() - 1;
  bool ok = h_count == o.h_order && Int(reps.size()) == o.q_order && sizes_ok && exact_ok &&
            round_ok && inject_ok && invar_ok && identity_failed && identity_dim >= 2 &&
            payload_to_coset.size() == coset_to_payload.size();

  rep << "[q=" << q << " a=2 b=3] units=" << units.get_str() << " hOrder=" << o.h_order.get_str()
      << " qOrder=" << o.q_order.get_str() << " hCount=" << h_count.get_str()
      << " cosets=" << reps.size() << " sizesOk=" << sizes_ok << " pglGood=" << pgl_good
      << " exactOk=" << exact_ok << " roundTripOk=" << round_ok << " cosetGood=" << coset_good
      << " payloads=" << payload_to_coset.size() << " cosetsHit=" << coset_to_payload.size()
      << " injective=" << inject_ok << " invariant=" << invar_ok
      << " identityKernelDim=" << identity_dim << "\n";
  return ok;
}

bool torus_count(const ExtFieldCtx& field, unsigned n, std::ostringstream& rep) {
  Int count = 0;
  std::vector<Int> c(field.degree(), 0);
  while (next_vec(c, field.base().q())) {
    if (tn_membership(field, ExtElement{c})) count += 1;
  }
  const Int expected = cyclotomic_eval(n, field.base().q());
  rep << "[torus] T" << n << "(F" << field.base().q().get_str() << ")=" << count.get_str()
      << " expected=" << expected.get_str() << "\n";
  return count == expected;
}

bool property_run(unsigned a, unsigned b, std::ostringstream& rep) {
  const Int q = 1009;
  TorusParams p = make_params(q, a, b, subseed(kSeed, "full"));
  SeededRng rng(subseed(kSeed, "full-units"), "selftest-units");
  const int trials = 200;
  int good = 0;
  for (int i = 0; i < trials; ++i) {
    TensorElement t = p.ctx.zero();
    do {
      for (unsigned k = 0; k < p.ctx.dim(); ++k) t.coeffs[k] = rng.below(q);
    } while (p.ctx.is_zero(t));
    CompressedCoset cc = compress_with_retries(p, t, 64);
    bool ok = coset_eq(p, decompress(p, reinflate(p, cc)), t);
    TensorElement t2 = rerandomize(p, t, subseed(kSeed, "full-h-" + std::to_string(i)));
    ok = ok && compress_with_retries(p, t2, 64) == cc;
    if (ok) ++good;
  }
  rep << "[q=1009 a=" << a << " b=" << b << "] trials=" << trials << " ok=" << good << "\n";
  return good == trials;
}

bool dh_run(std::ostringstream& rep) {
  ParamFileData pf = generate_params(1009, 2, 3, "746371");
  LoadedParams lp = load_params(pf);
  const int pairs = 5;
  int good = 0;
  for (int i = 0; i < pairs; ++i) {
    DhKeyPair alice = dh_keygen(lp.params, lp.generator, "alice-" + std::to_string(i), 64);
    DhKeyPair bob = dh_keygen(lp.params, lp.generator, "bob-" + std::to_string(i), 64);
    CompressedCoset s1 = dh_derive(lp.params, alice.secret, bob.public_value, 64);
    CompressedCoset s2 = dh_derive(lp.params, bob.secret, alice.public_value, 64);
    if (s1 == s2) ++good;
  }
  rep << "[dh q=1009 a=2 b=3] exchanges=" << pairs << " ok=" << good << "\n";

  ParamFileData back = parse_param_file(render_param_file(pf));
  const bool roundtrip = render_param_file(back) == render_param_file(pf);
  rep << "[paramfile] roundtrip=" << roundtrip << "\n";
  return good == pairs && roundtrip;
}

}  // namespace

SelftestResult run_selftest(std::string_view level) {
  if (level != "small" && level != "full") {
    throw MathDomainError("selftest level must be 'small' or 'full'");
  }
  std::ostringstream rep;
  rep << "selftest level=" << level << "\n";
  bool ok = true;

  ok = sweep_small(2, rep) && ok;
  ok = sweep_small(3, rep) && ok;

  // Degree-6 torus counts reuse the big fields of the sweeps' parameter
  // sets; the construction is deterministic, so rebuilding them is cheap.
  for (unsigned long q : {2ul, 3ul}) {
    TorusParams p = make_params(Int(q), 2, 3, kSeed);
    ok = torus_count(p.ctx.big(), 6, rep) && ok;
  }
  for (unsigned long q : {3ul, 5ul, 7ul}) {
    FieldCtx base((Int(q)));
    ExtFieldCtx quad(base, irreducible_gen(base, 2, kSeed));
    ok = torus_count(quad, 2, rep) && ok;
  }

  if (level == "full") {
    ok = property_run(2, 3, rep) && ok;
    ok = property_run(3, 5, rep) && ok;
    ok = dh_run(rep) && ok;
  }

  rep << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return SelftestResult{ok, rep.str()};
}

}  // namespace tcq::cli
