#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsdsig {

enum class Framework { tcith, voleith };

// One row of the builtin parameter tables. voleith rows drive only the size
// calculator and constraint validator; signing requires a tcith row.
struct ParamSet {
  std::string id;
  unsigned lambda = 128;     // security level in bits
  uint16_t p = 3;            // field characteristic
  unsigned z = 2;            // restriction size |E|; modeling degree d = z
  unsigned n = 0, k = 0;     // code length / dimension
  Framework framework = Framework::tcith;
  unsigned tau = 0;          // repetitions
  unsigned big_n = 0;        // leaves per seed tree, |Omega|
  unsigned w_grind = 0;      // grinding bits
  unsigned mu = 0, eta = 0;  // tcith: extension degree, batching rows
  unsigned rho = 0, t_open = 0;  // voleith: field exponent, opening budget
  bool opt_short = false;        // size-over-speed column
  unsigned ref_bytes = 0;        // reference signature size for this row

  unsigned d() const { return z; }
  unsigned r() const { return n - k; }
  unsigned depth() const;        // log2(big_n)
  unsigned cons_b() const;       // voleith consistency-check block B
  size_t salt_bytes() const { return 2 * lambda / 8; }
  size_t seed_bytes() const { return lambda / 8; }
  size_t digest_bytes() const { return 2 * lambda / 8; }
};

// Real-valued component sizes plus the byte total. Components are padded to
// whole bits individually before the byte ceiling; that convention is what
// reproduces every reference byte count (see docs/FORMATS.md).
struct SizeBreakdown {
  double sym_bits = 0;
  double wit_bits = 0;
  double rel_bits = 0;
  size_t total_bytes = 0;
};

SizeBreakdown tcith_size(const ParamSet& ps);    // throws on voleith rows
SizeBreakdown voleith_size(const ParamSet& ps);  // throws on tcith rows
SizeBreakdown scheme_size(const ParamSet& ps);

// Named violations of the security constraints; empty means valid.
std::vector<std::string> validate(const ParamSet& ps);

// per-repetition cheating probability 1/p^(mu*eta) + (1 - 1/p^(mu*eta))*d/N
double soundness_error(uint16_t p, unsigned mu, unsigned eta, unsigned d, unsigned big_n);

const std::vector<ParamSet>& builtin_sets();
const ParamSet* find_params(std::string_view id);  // nullptr when unknown

}  // namespace rsdsig
