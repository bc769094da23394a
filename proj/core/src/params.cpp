#include "rsdsig/params.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "rsdsig/field.h"

namespace rsdsig {

namespace {

ParamSet tcith_row(const char* id, unsigned lambda, uint16_t p, unsigned z,
                   unsigned n, unsigned k, unsigned tau, unsigned big_n,
                   unsigned mu, unsigned eta, unsigned w, bool opt_short,
                   unsigned ref_bytes) {
  ParamSet ps;
  ps.id = id;
  ps.lambda = lambda;
  ps.p = p;
  ps.z = z;
  ps.n = n;
  ps.k = k;
  ps.framework = Framework::tcith;
  ps.tau = tau;
  ps.big_n = big_n;
  ps.mu = mu;
  ps.eta = eta;
  ps.w_grind = w;
  ps.opt_short = opt_short;
  ps.ref_bytes = ref_bytes;
  return ps;
}

ParamSet voleith_row(const char* id, unsigned lambda, uint16_t p, unsigned z,
                     unsigned n, unsigned k, unsigned tau, unsigned big_n,
                     unsigned rho, unsigned t_open, unsigned w, bool opt_short,
                     unsigned ref_bytes) {
  ParamSet ps;
  ps.id = id;
  ps.lambda = lambda;
  ps.p = p;
  ps.z = z;
  ps.n = n;
  ps.k = k;
  ps.framework = Framework::voleith;
  ps.tau = tau;
  ps.big_n = big_n;
  ps.rho = rho;
  ps.t_open = t_open;
  ps.w_grind = w;
  ps.opt_short = opt_short;
  ps.ref_bytes = ref_bytes;
  return ps;
}

}  // namespace

unsigned ParamSet::depth() const {
  if (big_n == 0 || (big_n & (big_n - 1)) != 0)
    throw std::runtime_error("leaf count must be a power of two");
  return std::bit_width(big_n) - 1;
}

unsigned ParamSet::cons_b() const {
  return unsigned(std::ceil(16.0 / std::log2(double(p))));
}

SizeBreakdown tcith_size(const ParamSet& ps) {
  if (ps.framework != Framework::tcith)
    throw std::runtime_error("parameter set is not a tcith row");
  double lg = std::log2(double(ps.p));
  SizeBreakdown sz;
  sz.sym_bits = double(ps.tau) * ps.lambda * (ps.depth() + 1) + 5.0 * ps.lambda + 32;
  sz.wit_bits = double(ps.tau) * ps.k * lg;
  sz.rel_bits = double(ps.tau) * ps.eta * (ps.d() - 1) * ps.mu * lg;
  uint64_t bits = uint64_t(sz.sym_bits) + packed_bits(size_t(ps.tau) * ps.k, ps.p) +
                  packed_bits(size_t(ps.tau) * ps.eta * (ps.d() - 1) * ps.mu, ps.p);
  sz.total_bytes = size_t((bits + 7) / 8);
  return sz;
}

SizeBreakdown voleith_size(const ParamSet& ps) {
  if (ps.framework != Framework::voleith)
    throw std::runtime_error("parameter set is not a voleith row");
  double lg = std::log2(double(ps.p));
  SizeBreakdown sz;
  double sym_int = double(ps.tau) * 2 * ps.lambda + double(ps.t_open) * ps.lambda +
                   4.0 * ps.lambda + 32;
  sz.sym_bits = double(ps.tau) * (ps.rho + ps.cons_b()) * lg + sym_int;
  sz.wit_bits = double(ps.tau) * ps.k * lg;
  sz.rel_bits = double(ps.tau) * (ps.d() - 1) * ps.rho * lg;
  uint64_t bits = packed_bits(size_t(ps.tau) * (ps.rho + ps.cons_b()), ps.p) +
                  uint64_t(sym_int) + packed_bits(size_t(ps.tau) * ps.k, ps.p) +
                  packed_bits(size_t(ps.tau) * (ps.d() - 1) * ps.rho, ps.p);
  sz.total_bytes = size_t((bits + 7) / 8);
  return sz;
}

SizeBreakdown scheme_size(const ParamSet& ps) {
  return ps.framework == Framework::tcith ? tcith_size(ps) : voleith_size(ps);
}

std::vector<std::string> validate(const ParamSet& ps) {
  std::vector<std::string> bad;
  long double lg = std::log2((long double)ps.p);
  long double lam_w = (long double)ps.lambda - (long double)ps.w_grind;
  if (ps.big_n == 0 || (ps.big_n & (ps.big_n - 1)) != 0)
    bad.push_back("N must be a power of two");
  if (ps.framework == Framework::tcith) {
    // N <= p^mu, exact in integers
    uint64_t pmu = 1;
    for (unsigned i = 0; i < ps.mu; i++) pmu *= ps.p;
    if (ps.big_n > pmu) bad.push_back("N <= p^mu");
    if ((long double)ps.mu * ps.eta * lg < (long double)ps.lambda)
      bad.push_back("p^(mu*eta) >= 2^lambda");
    if ((long double)ps.tau * (std::log2((long double)ps.big_n) - std::log2((long double)ps.d())) < lam_w)
      bad.push_back("(N/d)^tau >= 2^(lambda-w)");
  } else {
    if ((long double)ps.tau * std::log2((long double)ps.big_n) -
            std::log2((long double)ps.d()) < lam_w)
      bad.push_back("N^tau/d >= 2^(lambda-w)");
    if ((long double)ps.rho * lg < (long double)ps.lambda)
      bad.push_back("p^rho >= 2^lambda");
    // ceil(log_p N) in exact integer arithmetic
    unsigned lpn = 0;
    uint64_t acc = 1;
    while (acc < ps.big_n) {
      acc *= ps.p;
      lpn++;
    }
    if (ps.rho < ps.tau * lpn) bad.push_back("rho >= tau*ceil(log_p N)");
  }
  return bad;
}

double soundness_error(uint16_t p, unsigned mu, unsigned eta, unsigned d, unsigned big_n) {
  double inv_k = std::exp2(-double(mu) * eta * std::log2(double(p)));
  return inv_k + (1.0 - inv_k) * double(d) / double(big_n);
}

const std::vector<ParamSet>& builtin_sets() {
  static const std::vector<ParamSet> sets = {
      tcith_row("cross-1-fast", 128, 127, 7, 127, 76, 24, 256, 2, 10, 4, false, 7650),
      tcith_row("cross-1-short", 128, 127, 7, 127, 76, 15, 2048, 2, 10, 6, true, 5533),
      tcith_row("ternary-1-fast", 128, 3, 2, 579, 213, 17, 256, 6, 14, 9, false, 3533),
      tcith_row("ternary-1-short", 128, 3, 2, 579, 213, 12, 2048, 7, 12, 8, true, 3095),
      tcith_row("cross-3-fast", 192, 127, 7, 187, 111, 36, 256, 2, 14, 6, false, 16675),
      tcith_row("cross-3-short", 192, 127, 7, 187, 111, 23, 2048, 2, 14, 4, true, 12354),
      tcith_row("ternary-3-fast", 192, 3, 2, 839, 309, 27, 256, 6, 21, 3, false, 8284),
      tcith_row("ternary-3-short", 192, 3, 2, 839, 309, 18, 2048, 7, 18, 12, true, 6860),
      tcith_row("cross-5-fast", 256, 127, 7, 251, 150, 48, 256, 2, 19, 7, false, 29839),
      tcith_row("cross-5-short", 256, 127, 7, 251, 150, 31, 2048, 2, 19, 3, true, 22305),
      tcith_row("ternary-5-fast", 256, 3, 2, 1102, 406, 36, 256, 6, 27, 4, false, 14584),
      tcith_row("ternary-5-short", 256, 3, 2, 1102, 406, 25, 2048, 7, 24, 6, true, 12608),
      voleith_row("cross-1-fast-v", 128, 127, 7, 127, 76, 16, 256, 32, 101, 3, false, 6432),
      voleith_row("cross-1-short-v", 128, 127, 7, 127, 76, 11, 2048, 22, 107, 10, true, 4372),
      voleith_row("ternary-1-fast-v", 128, 3, 2, 579, 213, 16, 256, 96, 101, 1, false, 3515),
      voleith_row("ternary-1-short-v", 128, 3, 2, 579, 213, 11, 2048, 81, 107, 8, true, 2974),
      voleith_row("cross-3-fast-v", 192, 127, 7, 187, 111, 24, 256, 48, 153, 3, false, 14359),
      voleith_row("cross-3-short-v", 192, 127, 7, 187, 111, 16, 4096, 32, 157, 3, true, 9361),
      voleith_row("ternary-3-fast-v", 192, 3, 2, 839, 309, 24, 256, 144, 153, 1, false, 7816),
      voleith_row("ternary-3-short-v", 192, 3, 2, 839, 309, 16, 4096, 128, 157, 1, true, 6463),
      voleith_row("cross-5-fast-v", 256, 127, 7, 251, 150, 32, 256, 64, 206, 3, false, 25573),
      voleith_row("cross-5-short-v", 256, 127, 7, 251, 150, 21, 4096, 42, 216, 7, true, 16589),
      voleith_row("ternary-5-fast-v", 256, 3, 2, 1102, 406, 32, 256, 192, 206, 1, false, 13851),
      voleith_row("ternary-5-short-v", 256, 3, 2, 1102, 406, 21, 4096, 168, 216, 5, true, 11521),
  };
  return sets;
}

const ParamSet* find_params(std::string_view id) {
  for (const auto& ps : builtin_sets())
    if (ps.id == id) return &ps;
  return nullptr;
}

}  // namespace rsdsig
