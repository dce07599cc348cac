#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tcq/quotient.hpp"

namespace tcq::cli {

// Typed contents of a parameter file. The file itself is line-oriented
// key=value text with LF endings, keys in the fixed order version, q, a, b,
// seed, fA, fB, fBig, rootA, rootB, u, v, generator; version is always TCQ1.
// Vectors are comma-separated decimals, constant term first.
struct ParamFileData {
  Int q;
  unsigned a = 0;
  unsigned b = 0;
  std::string seed_hex;
  Poly f_a;
  Poly f_b;
  Poly f_big;
  ExtElement root_a;
  ExtElement root_b;
  unsigned u = 0;
  unsigned v = 0;
  TensorElement generator;
};

// Parameter generation: seeded field towers plus a certified generator of
// the quotient group. The generator certificate needs the distinct primes
// of q_order; they are found by the internal factorizer unless the caller
// supplies them (q_order_primes). MathDomainError when the factoring budget
// is exhausted or a supplied factorization does not multiply out to q_order.
ParamFileData generate_params(const Int& q, unsigned a, unsigned b, std::string_view seed_hex,
                              const std::vector<Int>* q_order_primes = nullptr);

std::string render_param_file(const ParamFileData& p);
// MalformedPayload on any structural defect: unknown, duplicate or missing
// keys, bad decimals, wrong vector lengths, coefficients outside [0, q).
ParamFileData parse_param_file(std::string_view text);

struct LoadedParams {
  TorusParams params;
  TensorElement generator;
};

// Semantic verification of parsed data: rebuilds the contexts (re-checking
// primality, irreducibility, roots and table invertibility), checks (u, v)
// against the Bezout pair and that the generator is a unit outside H.
LoadedParams load_params(const ParamFileData& p);

// Comma-separated decimal encoding; empty vector gives the empty string.
std::string encode_vec(const std::vector<Int>& v);
// Strict inverse: exactly expect_len plain decimal entries, each in [0, q).
std::vector<Int> parse_vec(std::string_view text, std::size_t expect_len, const Int& q);

// Element and coset payloads: "TCQ1\n" followed by one encoded line.
std::string render_element_payload(const TorusParams& p, const TensorElement& t);
TensorElement parse_element_payload(const TorusParams& p, std::string_view text);
std::string render_coset_payload(const TorusParams& p, const CompressedCoset& c);
CompressedCoset parse_coset_payload(const TorusParams& p, std::string_view text);

// Compression with the retry policy: on OutOfGoodLocus, retry with
// rerandomized representatives (seeds derived from t and the attempt
// number), up to `retries` extra attempts, then rethrow.
CompressedCoset compress_with_retries(const TorusParams& p, const TensorElement& t,
                                      unsigned retries);

struct DhKeyPair {
  Int secret;
  CompressedCoset public_value;
};

// Secret derived uniformly from [1, q_order) by the seeded stream.
Int dh_secret_from_seed(const TorusParams& p, std::string_view seed);
DhKeyPair dh_keygen(const TorusParams& p, const TensorElement& generator, std::string_view seed,
                    unsigned retries);
CompressedCoset dh_derive(const TorusParams& p, const Int& secret, const CompressedCoset& peer,
                          unsigned retries);

struct SelftestResult {
  bool ok;
  std::string report;
};

// level is "small" (exhaustive checks over q = 2 and q = 3) or "full"
// (adds seeded property runs at q = 1009 and a key exchange). The report is
// byte-deterministic.
SelftestResult run_selftest(std::string_view level);

// Lowercase/uppercase hex to raw bytes; MalformedPayload on odd length or
// non-hex characters. Empty string allowed.
std::string seed_bytes_from_hex(std::string_view hex);

// Full command-line surface. args excludes the program name. Exit codes:
// 0 success, 1 usage or I/O error, 2 mathematical error, 3 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcq::cli
