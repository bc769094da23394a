// rsdsig command-line front end: keygen / sign / verify / params / bench /
// selftest. Exit codes: 0 success or accept, 1 reject or failed check,
// 2 usage and I/O errors.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsdsig/field.h"
#include "rsdsig/params.h"
#include "rsdsig/piop.h"
#include "rsdsig/rsdp.h"
#include "rsdsig/sig.h"
#include "rsdsig/vc.h"
#include "rsdsig/xof.h"

namespace {

using nlohmann::json;
using namespace rsdsig;

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::vector<uint8_t> parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::runtime_error("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::runtime_error("invalid hex digit");
  };
  std::vector<uint8_t> out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); i++)
    out[i] = static_cast<uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

std::unique_ptr<Rng> make_rng(const std::string& seed_hex) {
  if (seed_hex.empty()) return std::make_unique<SystemRng>();
  auto seed = parse_hex(seed_hex);
  return std::make_unique<SeededRng>(seed);
}

const ParamSet& signing_params(const std::string& id) {
  const ParamSet* ps = find_params(id);
  if (!ps) throw CLI::ValidationError("--params", "unknown parameter set '" + id + "'");
  if (ps->framework != Framework::tcith)
    throw CLI::ValidationError(
        "--params", "'" + id + "' is a voleith calculator row; signing requires a tcith set");
  return *ps;
}

// ---- params subcommand -----------------------------------------------------

json param_json(const ParamSet& ps) {
  json j{{"id", ps.id},
         {"lambda", ps.lambda},
         {"p", ps.p},
         {"z", ps.z},
         {"n", ps.n},
         {"k", ps.k},
         {"framework", ps.framework == Framework::tcith ? "tcith" : "voleith"},
         {"tau", ps.tau},
         {"N", ps.big_n},
         {"w_grind", ps.w_grind},
         {"short", ps.opt_short}};
  if (ps.framework == Framework::tcith) {
    j["mu"] = ps.mu;
    j["eta"] = ps.eta;
  } else {
    j["rho"] = ps.rho;
    j["T_open"] = ps.t_open;
    j["B"] = ps.cons_b();
  }
  if (ps.ref_bytes) j["ref_bytes"] = ps.ref_bytes;
  return j;
}

ParamSet param_from_json(const json& j) {
  ParamSet ps;
  ps.id = j.at("id").get<std::string>();
  ps.lambda = j.at("lambda").get<unsigned>();
  ps.p = j.at("p").get<uint16_t>();
  ps.z = j.at("z").get<unsigned>();
  ps.n = j.at("n").get<unsigned>();
  ps.k = j.at("k").get<unsigned>();
  std::string fw = j.at("framework").get<std::string>();
  if (fw == "tcith")
    ps.framework = Framework::tcith;
  else if (fw == "voleith")
    ps.framework = Framework::voleith;
  else
    throw std::runtime_error("framework must be 'tcith' or 'voleith'");
  ps.tau = j.at("tau").get<unsigned>();
  ps.big_n = j.at("N").get<unsigned>();
  ps.w_grind = j.value("w_grind", 0u);
  ps.mu = j.value("mu", 0u);
  ps.eta = j.value("eta", 0u);
  ps.rho = j.value("rho", 0u);
  ps.t_open = j.value("T_open", 0u);
  ps.opt_short = j.value("short", false);
  ps.ref_bytes = j.value("ref_bytes", 0u);
  return ps;
}

struct ParamRow {
  const ParamSet* ps;
  SizeBreakdown sz;
  std::vector<std::string> violations;
};

void print_params_text(const std::vector<ParamRow>& rows, Framework fw) {
  if (fw == Framework::tcith) {
    std::printf("%-17s %4s %4s %2s %5s %4s %4s %5s %3s %4s %3s %6s %6s %5s\n", "id", "lam",
                "p", "z", "n", "k", "tau", "N", "mu", "eta", "w", "bytes", "ref", "diff");
  } else {
    std::printf("%-17s %4s %4s %2s %5s %4s %4s %5s %4s %6s %3s %6s %6s %5s\n", "id", "lam",
                "p", "z", "n", "k", "tau", "N", "rho", "T_open", "w", "bytes", "ref", "diff");
  }
  for (const auto& row : rows) {
    const ParamSet& ps = *row.ps;
    long diff = ps.ref_bytes ? static_cast<long>(row.sz.total_bytes) - ps.ref_bytes : 0;
    if (fw == Framework::tcith) {
      std::printf("%-17s %4u %4u %2u %5u %4u %4u %5u %3u %4u %3u %6zu %6u %+5ld\n",
                  ps.id.c_str(), ps.lambda, ps.p, ps.z, ps.n, ps.k, ps.tau, ps.big_n, ps.mu,
                  ps.eta, ps.w_grind, row.sz.total_bytes, ps.ref_bytes, diff);
    } else {
      std::printf("%-17s %4u %4u %2u %5u %4u %4u %5u %4u %6u %3u %6zu %6u %+5ld\n",
                  ps.id.c_str(), ps.lambda, ps.p, ps.z, ps.n, ps.k, ps.tau, ps.big_n, ps.rho,
                  ps.t_open, ps.w_grind, row.sz.total_bytes, ps.ref_bytes, diff);
    }
    for (const auto& v : row.violations)
      std::printf("  ! constraint violated: %s\n", v.c_str());
  }
}

void print_params_csv(const std::vector<ParamRow>& rows) {
  std::printf(
      "id,framework,lambda,p,z,n,k,tau,N,w_grind,mu,eta,rho,T_open,"
      "sym_bits,wit_bits,rel_bits,bytes,ref_bytes,diff,valid\n");
  for (const auto& row : rows) {
    const ParamSet& ps = *row.ps;
    long diff = ps.ref_bytes ? static_cast<long>(row.sz.total_bytes) - ps.ref_bytes : 0;
    std::printf("%s,%s,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%.3f,%.3f,%.3f,%zu,%u,%ld,%d\n",
                ps.id.c_str(), ps.framework == Framework::tcith ? "tcith" : "voleith",
                ps.lambda, ps.p, ps.z, ps.n, ps.k, ps.tau, ps.big_n, ps.w_grind, ps.mu, ps.eta,
                ps.rho, ps.t_open, row.sz.sym_bits, row.sz.wit_bits, row.sz.rel_bits,
                row.sz.total_bytes, ps.ref_bytes, diff, row.violations.empty() ? 1 : 0);
  }
}

void print_params_json(const std::vector<ParamRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json j = param_json(*row.ps);
    j["size"] = {{"sym_bits", row.sz.sym_bits},
                 {"wit_bits", row.sz.wit_bits},
                 {"rel_bits", row.sz.rel_bits},
                 {"bytes", row.sz.total_bytes}};
    if (row.ps->ref_bytes)
      j["diff"] = static_cast<long>(row.sz.total_bytes) - row.ps->ref_bytes;
    j["valid"] = row.violations.empty();
    if (!row.violations.empty()) j["violations"] = row.violations;
    out.push_back(std::move(j));
  }
  std::printf("%s\n", out.dump(2).c_str());
}

int cmd_params(int table, const std::string& format, const std::string& in_path,
               const std::string& id) {
  std::vector<ParamSet> loaded;
  std::vector<const ParamSet*> selected;
  if (!in_path.empty()) {
    auto raw = read_file(in_path);
    json j = json::parse(raw.begin(), raw.end());
    if (j.is_array())
      for (const auto& e : j) loaded.push_back(param_from_json(e));
    else
      loaded.push_back(param_from_json(j));
    for (const auto& ps : loaded) selected.push_back(&ps);
  } else if (!id.empty()) {
    const ParamSet* ps = find_params(id);
    if (!ps) throw CLI::ValidationError("--params", "unknown parameter set '" + id + "'");
    selected.push_back(ps);
  } else {
    for (const auto& ps : builtin_sets()) {
      if (table == 1 && ps.framework != Framework::tcith) continue;
      if (table == 2 && ps.framework != Framework::voleith) continue;
      selected.push_back(&ps);
    }
  }

  std::vector<ParamRow> rows;
  for (const ParamSet* ps : selected) rows.push_back({ps, scheme_size(*ps), validate(*ps)});

  if (format == "json") {
    print_params_json(rows);
  } else if (format == "csv") {
    print_params_csv(rows);
  } else {
    // text: group by framework so the column sets line up
    for (Framework fw : {Framework::tcith, Framework::voleith}) {
      std::vector<ParamRow> part;
      for (const auto& row : rows)
        if (row.ps->framework == fw) part.push_back(row);
      if (part.empty()) continue;
      std::printf("%s\n", fw == Framework::tcith ? "tcith" : "voleith");
      print_params_text(part, fw);
      std::printf("\n");
    }
  }
  for (const auto& row : rows)
    if (!row.violations.empty()) return 1;
  return 0;
}

// ---- keygen / sign / verify ------------------------------------------------

int cmd_keygen(const std::string& id, const std::string& out_path,
               const std::string& key_path, const std::string& seed_hex) {
  const ParamSet& ps = signing_params(id);
  auto rng = make_rng(seed_hex);
  auto [sk, vk] = sig::keygen(ps, *rng);
  write_file(out_path, sig::encode_verify_key(vk, ps));
  write_file(key_path, sig::encode_signing_key(sk, ps));
  std::printf("%s: wrote verify key (%zu bytes) and signing key (%zu bytes)\n", id.c_str(),
              sig::verify_key_bytes(ps), sig::signing_key_bytes(ps));
  return 0;
}

int cmd_sign(const std::string& id, const std::string& key_path, const std::string& msg_path,
             const std::string& out_path, const std::string& seed_hex) {
  const ParamSet& ps = signing_params(id);
  auto sk = sig::decode_signing_key(read_file(key_path), ps);
  auto msg = read_file(msg_path);
  auto rng = make_rng(seed_hex);
  auto bytes = sig::serialize(sig::sign(sk, msg, ps, *rng), ps);
  write_file(out_path, bytes);
  std::printf("%s: wrote signature (%zu bytes)\n", id.c_str(), bytes.size());
  return 0;
}

int cmd_verify(const std::string& id, const std::string& key_path, const std::string& msg_path,
               const std::string& in_path) {
  const ParamSet& ps = signing_params(id);
  auto vk = sig::decode_verify_key(read_file(key_path), ps);
  auto msg = read_file(msg_path);
  sig::Signature s;
  try {
    s = sig::deserialize(read_file(in_path), ps);
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "reject: %s\n", e.what());
    return 1;
  }
  if (!sig::verify(vk, msg, s, ps)) {
    std::fprintf(stderr, "reject\n");
    return 1;
  }
  std::printf("accept\n");
  return 0;
}

// ---- bench ------------------------------------------------------------------

int cmd_bench(const std::string& id, unsigned iters, const std::string& seed_hex) {
  const ParamSet& ps = signing_params(id);
  auto rng = make_rng(seed_hex);
  auto [sk, vk] = sig::keygen(ps, *rng);
  std::vector<uint8_t> msg = rng->bytes(64);

  using clock = std::chrono::steady_clock;
  double sign_ms = 0, verify_ms = 0;
  size_t bytes = 0;
  for (unsigned i = 0; i < iters; i++) {
    auto t0 = clock::now();
    auto s = sig::sign(sk, msg, ps, *rng);
    auto t1 = clock::now();
    bool ok = sig::verify(vk, msg, s, ps);
    auto t2 = clock::now();
    if (!ok) {
      std::fprintf(stderr, "bench: self-verification failed\n");
      return 1;
    }
    sign_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
    verify_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
    bytes = sig::serialize(s, ps).size();
  }
  std::printf("%s: sign %.2f ms  verify %.2f ms  signature %zu bytes  (%u iterations)\n",
              id.c_str(), sign_ms / iters, verify_ms / iters, bytes, iters);
  return 0;
}

// ---- selftest ----------------------------------------------------------------

int cmd_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const char* name) {
    std::printf("%-34s %s\n", name, ok ? "ok" : "FAIL");
    if (!ok) failures++;
  };

  // size tables
  bool tables_ok = true;
  for (const auto& ps : builtin_sets()) {
    size_t got = scheme_size(ps).total_bytes;
    long diff = static_cast<long>(got) - ps.ref_bytes;
    bool row_ok = ps.framework == Framework::tcith ? diff == 0 : (diff >= -2 && diff <= 2);
    if (!row_ok) tables_ok = false;
  }
  check(tables_ok, "size tables");

  // constraint validation
  bool valid_ok = true;
  for (const auto& ps : builtin_sets())
    if (!validate(ps).empty()) valid_ok = false;
  check(valid_ok, "parameter constraints");

  // restriction polynomial vanishes exactly on E
  bool fe_ok = true;
  for (uint16_t p : {uint16_t{127}, uint16_t{3}}) {
    PrimeField fp(p);
    auto res = builtin_restriction(fp, p == 127 ? 7 : 2);
    for (uint16_t x = 0; x < p; x++) {
      uint16_t acc = 0;
      for (size_t i = res.fe_coeffs.size(); i-- > 0;)
        acc = fp.add(fp.mul(acc, x), res.fe_coeffs[i]);
      bool in_set =
          std::find(res.elements.begin(), res.elements.end(), x) != res.elements.end();
      if ((acc == 0) != in_set) fe_ok = false;
    }
  }
  check(fe_ok, "restriction polynomial");

  // one end-to-end signature per NIST-1 set under a fixed seed
  for (const char* id : {"cross-1-fast", "ternary-1-fast"}) {
    const ParamSet& ps = *find_params(id);
    SeededRng rng(std::vector<uint8_t>{0x73, 0x65, 0x6c, 0x66});
    auto [sk, vk] = sig::keygen(ps, rng);
    std::vector<uint8_t> msg{'s', 'e', 'l', 'f', 't', 'e', 's', 't'};
    auto s = sig::sign(sk, msg, ps, rng);
    bool ok = sig::verify(vk, msg, s, ps);
    auto bytes = sig::serialize(s, ps);
    ok = ok && sig::deserialize(bytes, ps) == s;
    msg[0] ^= 1;
    ok = ok && !sig::verify(vk, msg, s, ps);
    check(ok, id);
  }

  std::printf("%s\n", failures ? "SELFTEST FAILED" : "selftest passed");
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restricted-syndrome-decoding signatures"};
  app.require_subcommand(1);

  std::string params_id, in_path, out_path, key_path, msg_path, seed_hex;
  std::string format = "text";
  int table = 0;
  unsigned iters = 10;

  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--params", params_id, "parameter set id")->required();
  keygen->add_option("--out", out_path, "verify key output path")->required();
  keygen->add_option("--key", key_path, "signing key output path")->required();
  keygen->add_option("--seed", seed_hex, "hex seed for deterministic keys");

  auto* sign = app.add_subcommand("sign", "sign a message file");
  sign->add_option("--params", params_id, "parameter set id")->required();
  sign->add_option("--key", key_path, "signing key path")->required();
  sign->add_option("--msg", msg_path, "message path")->required();
  sign->add_option("--out", out_path, "signature output path")->required();
  sign->add_option("--seed", seed_hex, "hex seed for deterministic signing");

  auto* verify = app.add_subcommand("verify", "verify a signature file");
  verify->add_option("--params", params_id, "parameter set id")->required();
  verify->add_option("--key", key_path, "verify key path")->required();
  verify->add_option("--msg", msg_path, "message path")->required();
  verify->add_option("--in", in_path, "signature path")->required();

  auto* params = app.add_subcommand("params", "print parameter tables and sizes");
  params->add_option("--table", table, "restrict to table 1 (tcith) or 2 (voleith)")
      ->check(CLI::Range(1, 2));
  params->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  params->add_option("--in", in_path, "JSON parameter file to size instead of builtins");
  params->add_option("--params", params_id, "restrict to one builtin set");

  auto* bench = app.add_subcommand("bench", "time sign/verify");
  bench->add_option("--params", params_id, "parameter set id")->required();
  bench->add_option("--iters", iters, "iterations")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed_hex, "hex seed");

  auto* selftest = app.add_subcommand("selftest", "run quick built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(keygen)) return cmd_keygen(params_id, out_path, key_path, seed_hex);
    if (app.got_subcommand(sign)) return cmd_sign(params_id, key_path, msg_path, out_path, seed_hex);
    if (app.got_subcommand(verify)) return cmd_verify(params_id, key_path, msg_path, in_path);
    if (app.got_subcommand(params)) return cmd_params(table, format, in_path, params_id);
    if (app.got_subcommand(bench)) return cmd_bench(params_id, iters, seed_hex);
    if (app.got_subcommand(selftest)) return cmd_selftest();
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
