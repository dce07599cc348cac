#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcq/cli.hpp"
#include "tcq/errors.hpp"

namespace tcq::cli {

namespace {

// I/O failures are invocation problems, not data problems: exit code 1.
struct FileError {
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FileError{"cannot open " + path + " for reading"};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, std::string_view data, std::ostream& out) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FileError{"cannot open " + path + " for writing"};
  f << data;
  if (!f) throw FileError{"failed writing " + path};
}

Int parse_q_flag(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw CLI::ValidationError("--q", "must be a decimal integer");
  }
  return Int(s, 10);
}

std::vector<Int> parse_factor_flag(const std::string& s) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(',', start);
    std::string tok = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
      throw CLI::ValidationError("--factorization", "must be comma-separated decimals");
    }
    out.emplace_back(tok, 10);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

LoadedParams load_params_file(const std::string& path, std::istream& in) {
  return load_params(parse_param_file(read_input(path, in)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"compressed-coordinate arithmetic on torus quotients of finite fields"};
  app.name("tcq");
  app.require_subcommand(1);

  std::istream& in = std::cin;

  // params
  auto* sc_params = app.add_subcommand("params", "generate a parameter file");
  std::string q_str, seed_hex, fact_str, params_out = "-";
  unsigned deg_a = 0, deg_b = 0;
  sc_params->add_option("--q", q_str, "prime base field size")->required();
  sc_params->add_option("--a", deg_a, "degree of A")->required()->check(CLI::Range(1u, 256u));
  sc_params->add_option("--b", deg_b, "degree of B")->required()->check(CLI::Range(1u, 256u));
  sc_params->add_option("--seed", seed_hex, "hex seed for all derivations")->required();
  sc_params->add_option("--out", params_out, "output file, - for stdout");
  sc_params->add_option("--factorization", fact_str,
                        "comma-separated prime factors of the quotient order");
  sc_params->callback([&] {
    std::vector<Int> factors;
    const std::vector<Int>* fptr = nullptr;
    if (!fact_str.empty()) {
      factors = parse_factor_flag(fact_str);
      fptr = &factors;
    }
    ParamFileData pf = generate_params(parse_q_flag(q_str), deg_a, deg_b, seed_hex, fptr);
    write_output(params_out, render_param_file(pf), out);
  });

  // compress
  auto* sc_comp = app.add_subcommand("compress", "compress a unit to its coset payload");
  std::string comp_params, comp_in = "-", comp_out = "-";
  unsigned comp_retries = 64;
  sc_comp->add_option("--params", comp_params, "parameter file")->required();
  sc_comp->add_option("--in", comp_in, "element payload, - for stdin");
  sc_comp->add_option("--out", comp_out, "coset payload, - for stdout");
  sc_comp->add_option("--retries", comp_retries, "rerandomized retries on a bad locus");
  sc_comp->callback([&] {
    LoadedParams lp = load_params_file(comp_params, in);
    TensorElement t = parse_element_payload(lp.params, read_input(comp_in, in));
    CompressedCoset cc = compress_with_retries(lp.params, t, comp_retries);
    write_output(comp_out, render_coset_payload(lp.params, cc), out);
  });

  // decompress
  auto* sc_dec = app.add_subcommand("decompress", "expand a coset payload to its representative");
  std::string dec_params, dec_in = "-", dec_out = "-";
  sc_dec->add_option("--params", dec_params, "parameter file")->required();
  sc_dec->add_option("--in", dec_in, "coset payload, - for stdin");
  sc_dec->add_option("--out", dec_out, "element payload, - for stdout");
  sc_dec->callback([&] {
    LoadedParams lp = load_params_file(dec_params, in);
    CompressedCoset cc = parse_coset_payload(lp.params, read_input(dec_in, in));
    TensorElement t = decompress(lp.params, reinflate(lp.params, cc));
    write_output(dec_out, render_element_payload(lp.params, t), out);
  });

  // coset-eq
  auto* sc_eq = app.add_subcommand("coset-eq", "test whether two units share a coset");
  std::string eq_params, eq_lhs, eq_rhs;
  sc_eq->add_option("--params", eq_params, "parameter file")->required();
  sc_eq->add_option("lhs", eq_lhs, "first element payload file")->required();
  sc_eq->add_option("rhs", eq_rhs, "second element payload file")->required();
  sc_eq->callback([&] {
    LoadedParams lp = load_params_file(eq_params, in);
    TensorElement t1 = parse_element_payload(lp.params, read_input(eq_lhs, in));
    TensorElement t2 = parse_element_payload(lp.params, read_input(eq_rhs, in));
    out << (coset_eq(lp.params, t1, t2) ? "equal" : "different") << "\n";
  });

  // dh keygen / dh derive
  auto* sc_dh = app.add_subcommand("dh", "compressed key exchange");
  sc_dh->require_subcommand(1);

  auto* sc_kg = sc_dh->add_subcommand("keygen", "derive a key pair");
  std::string kg_params, kg_seed, kg_secret, kg_out = "-";
  unsigned kg_retries = 64;
  sc_kg->add_option("--params", kg_params, "parameter file")->required();
  sc_kg->add_option("--seed", kg_seed, "seed bytes for the secret");
  sc_kg->add_option("--secret", kg_secret, "explicit secret exponent (overrides --seed)");
  sc_kg->add_option("--out", kg_out, "public payload, - for stdout");
  sc_kg->add_option("--retries", kg_retries, "rerandomized retries on a bad locus");
  sc_kg->callback([&] {
    if (kg_seed.empty() && kg_secret.empty()) {
      throw CLI::RequiredError("dh keygen needs --seed or --secret");
    }
    LoadedParams lp = load_params_file(kg_params, in);
    DhKeyPair kp;
    if (!kg_secret.empty()) {
      kp.secret = parse_q_flag(kg_secret);
      if (kp.secret < 1) throw CLI::ValidationError("--secret", "must be >= 1");
      kp.public_value =
          compress_with_retries(lp.params, lp.params.ctx.pow(lp.generator, kp.secret), kg_retries);
    } else {
      kp = dh_keygen(lp.params, lp.generator, kg_seed, kg_retries);
    }
    out << "secret=" << kp.secret.get_str() << "\n";
    write_output(kg_out, render_coset_payload(lp.params, kp.public_value), out);
  });

  auto* sc_dv = sc_dh->add_subcommand("derive", "derive the shared payload");
  std::string dv_params, dv_seed, dv_secret, dv_in = "-", dv_out = "-";
  unsigned dv_retries = 64;
  sc_dv->add_option("--params", dv_params, "parameter file")->required();
  sc_dv->add_option("--seed", dv_seed, "seed bytes for the own secret");
  sc_dv->add_option("--secret", dv_secret, "explicit secret exponent (overrides --seed)");
  sc_dv->add_option("--in", dv_in, "peer public payload, - for stdin");
  sc_dv->add_option("--out", dv_out, "shared payload, - for stdout");
  sc_dv->add_option("--retries", dv_retries, "rerandomized retries on a bad locus");
  sc_dv->callback([&] {
    if (dv_seed.empty() && dv_secret.empty()) {
      throw CLI::RequiredError("dh derive needs --seed or --secret");
    }
    LoadedParams lp = load_params_file(dv_params, in);
    Int secret = !dv_secret.empty() ? parse_q_flag(dv_secret)
                                    : dh_secret_from_seed(lp.params, dv_seed);
    CompressedCoset peer = parse_coset_payload(lp.params, read_input(dv_in, in));
    CompressedCoset shared = dh_derive(lp.params, secret, peer, dv_retries);
    write_output(dv_out, render_coset_payload(lp.params, shared), out);
  });

  // selftest
  auto* sc_st = app.add_subcommand("selftest", "deterministic internal consistency checks");
  std::string st_level = "small";
  sc_st->add_option("level", st_level, "small or full")
      ->check(CLI::IsMember({"small", "full"}));
  bool selftest_failed = false;
  sc_st->callback([&] {
    SelftestResult r = run_selftest(st_level);
    out << r.report;
    selftest_failed = !r.ok;
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const FileError& e) {
    err << "error: " << e.message << "\n";
    return 1;
  } catch (const MalformedPayload& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (selftest_failed) {
    err << "error: selftest reported failures" << "\n";
    return 2;
  }
  return 0;
}

}  // namespace tcq::cli
