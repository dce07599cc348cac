#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "tcq/cli.hpp"
#include "tcq/errors.hpp"

namespace tcq::cli {

namespace {

constexpr std::string_view kMagic = "TCQ1";

// Realistic parameterizations keep the degrees small; the cap only guards
// against absurd inputs taking the process down.
constexpr unsigned kMaxDegree = 256;
constexpr unsigned kMaxDim = 4096;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Int parse_decimal(std::string_view tok, std::string_view what) {
  if (tok.empty()) throw MalformedPayload(std::string(what) + ": empty number");
  for (char c : tok) {
    if (c < '0' || c > '9') {
      throw MalformedPayload(std::string(what) + ": invalid decimal '" + std::string(tok) + "'");
    }
  }
  return Int(std::string(tok), 10);
}

unsigned parse_small(std::string_view tok, std::string_view what, unsigned max) {
  Int n = parse_decimal(tok, what);
  if (n < 1 || n > max) {
    throw MalformedPayload(std::string(what) + " out of range [1, " + std::to_string(max) + "]");
  }
  return static_cast<unsigned>(n.get_ui());
}

// Splits payload text into content lines, requiring LF endings and
// tolerating exactly one trailing newline.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (lines.size() > 1 && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<Int> parse_payload_body(std::string_view text, std::size_t expect_len, const Int& q,
                                    std::string_view what) {
  std::vector<std::string_view> lines = content_lines(text);
  if (lines.size() != 2 || lines[0] != kMagic) {
    throw MalformedPayload(std::string(what) + ": expected a TCQ1 header and one data line");
  }
  return parse_vec(lines[1], expect_len, q);
}

}  // namespace

std::string encode_vec(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::vector<Int> parse_vec(std::string_view text, std::size_t expect_len, const Int& q) {
  if (expect_len == 0) {
    if (!text.empty()) throw MalformedPayload("expected an empty coordinate line");
    return {};
  }
  std::vector<std::string_view> toks = split(text, ',');
  if (toks.size() != expect_len) {
    throw MalformedPayload("expected " + std::to_string(expect_len) + " coordinates, got " +
                           std::to_string(toks.size()));
  }
  std::vector<Int> out;
  out.reserve(expect_len);
  for (std::string_view t : toks) {
    Int c = parse_decimal(t, "coordinate");
    if (c >= q) throw MalformedPayload("coordinate " + c.get_str() + " not reduced mod q");
    out.push_back(std::move(c));
  }
  return out;
}

std::string render_element_payload(const TorusParams&, const TensorElement& t) {
  return std::string(kMagic) + "\n" + encode_vec(t.coeffs) + "\n";
}

TensorElement parse_element_payload(const TorusParams& p, std::string_view text) {
  return TensorElement{
      parse_payload_body(text, p.ctx.dim(), p.ctx.base().q(), "element payload")};
}

std::string render_coset_payload(const TorusParams&, const CompressedCoset& c) {
  std::vector<Int> flat = c.xr;
  flat.insert(flat.end(), c.yr.begin(), c.yr.end());
  return std::string(kMagic) + "\n" + encode_vec(flat) + "\n";
}

CompressedCoset parse_coset_payload(const TorusParams& p, std::string_view text) {
  std::vector<Int> flat =
      parse_payload_body(text, p.payload_len(), p.ctx.base().q(), "coset payload");
  const std::size_t xr_len = static_cast<std::size_t>(p.v - 1) * p.b;
  CompressedCoset c;
  c.xr.assign(flat.begin(), flat.begin() + xr_len);
  c.yr.assign(flat.begin() + xr_len, flat.end());
  return c;
}

std::string seed_bytes_from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw MalformedPayload("hex seed has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw MalformedPayload("hex seed has a non-hex character");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

namespace {

const char* const kParamKeys[] = {"version", "q",  "a",     "b", "seed", "fA", "fB",
                                  "fBig",    "rootA", "rootB", "u", "v",    "generator"};

}  // namespace

std::string render_param_file(const ParamFileData& p) {
  std::string s;
  s += "version=TCQ1\n";
  s += "q=" + p.q.get_str() + "\n";
  s += "a=" + std::to_string(p.a) + "\n";
  s += "b=" + std::to_string(p.b) + "\n";
  s += "seed=" + p.seed_hex + "\n";
  s += "fA=" + encode_vec(p.f_a) + "\n";
  s += "fB=" + encode_vec(p.f_b) + "\n";
  s += "fBig=" + encode_vec(p.f_big) + "\n";
  s += "rootA=" + encode_vec(p.root_a.coeffs) + "\n";
  s += "rootB=" + encode_vec(p.root_b.coeffs) + "\n";
  s += "u=" + std::to_string(p.u) + "\n";
  s += "v=" + std::to_string(p.v) + "\n";
  s += "generator=" + encode_vec(p.generator.coeffs) + "\n";
  return s;
}

ParamFileData parse_param_file(std::string_view text) {
  std::map<std::string_view, std::string_view> kv;
  for (std::string_view line : content_lines(text)) {
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw MalformedPayload("parameter line without '=': " + std::string(line));
    }
    std::string_view key = line.substr(0, eq);
    if (!kv.emplace(key, line.substr(eq + 1)).second) {
      throw MalformedPayload("duplicate parameter key " + std::string(key));
    }
  }
  for (const char* key : kParamKeys) {
    if (!kv.count(key)) throw MalformedPayload(std::string("missing parameter key ") + key);
  }
  if (kv.size() != std::size(kParamKeys)) throw MalformedPayload("unknown parameter key present");
  if (kv["version"] != kMagic) {
    throw MalformedPayload("unsupported version " + std::string(kv["version"]));
  }

  ParamFileData p;
  p.q = parse_decimal(kv["q"], "q");
  if (p.q < 2) throw MalformedPayload("q out of range");
  p.a = parse_small(kv["a"], "a", kMaxDegree);
  p.b = parse_small(kv["b"], "b", kMaxDegree);
  if (static_cast<unsigned long>(p.a) * p.b > kMaxDim) throw MalformedPayload("a*b too large");
  p.seed_hex = std::string(kv["seed"]);
  seed_bytes_from_hex(p.seed_hex);  // syntax check only
  const unsigned ab = p.a * p.b;
  p.f_a = parse_vec(kv["fA"], p.a + 1, p.q);
  p.f_b = parse_vec(kv["fB"], p.b + 1, p.q);
  p.f_big = parse_vec(kv["fBig"], ab + 1, p.q);
  p.root_a = ExtElement{parse_vec(kv["rootA"], ab, p.q)};
  p.root_b = ExtElement{parse_vec(kv["rootB"], ab, p.q)};
  p.u = parse_small(kv["u"], "u", kMaxDegree);
  p.v = parse_small(kv["v"], "v", kMaxDegree);
  p.generator = TensorElement{parse_vec(kv["generator"], ab, p.q)};
  return p;
}

LoadedParams load_params(const ParamFileData& pf) {
  FieldCtx base(pf.q);  // re-checks primality
  ExtFieldCtx field_a(base, pf.f_a);
  ExtFieldCtx field_b(base, pf.f_b);
  ExtFieldCtx big(base, pf.f_big);
  TensorCtx ctx = TensorCtx::from_parts(std::move(field_a), std::move(field_b), std::move(big),
                                        pf.root_a, pf.root_b);
  TorusParams params = params_from_ctx(std::move(ctx));
  if (params.u != pf.u || params.v != pf.v) {
    throw MalformedPayload("stored (u, v) does not match the Bezout pair");
  }
  if (params.ctx.is_zero(pf.generator)) throw MalformedPayload("generator is zero");
  const SubgroupOrders o = orders(pf.q, pf.a, pf.b);
  if (o.q_order > 1 && h_membership(params, pf.generator)) {
    throw MalformedPayload("generator lies in the subgroup H");
  }
  return LoadedParams{std::move(params), pf.generator};
}

}  // namespace tcq::cli
