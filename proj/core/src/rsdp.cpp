#include "rsdsig/rsdp.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rsdsig/xof.h"

namespace rsdsig {

Restriction build_restriction(const PrimeField& fp, std::vector<uint16_t> elements) {
  if (elements.empty()) throw std::runtime_error("restriction must be nonempty");
  for (size_t i = 0; i < elements.size(); i++)
    for (size_t j = i + 1; j < elements.size(); j++)
      if (elements[i] == elements[j])
        throw std::runtime_error("restriction elements must be distinct");
  std::vector<uint16_t> f{1};
  for (uint16_t e : elements) {
    // f *= (x - e)
    std::vector<uint16_t> g(f.size() + 1, 0);
    for (size_t i = 0; i < f.size(); i++) {
      g[i + 1] = fp.add(g[i + 1], f[i]);
      g[i] = fp.sub(g[i], fp.mul(f[i], e));
    }
    f = std::move(g);
  }
  return Restriction{std::move(elements), std::move(f)};
}

Restriction builtin_restriction(const PrimeField& fp, unsigned z) {
  if (fp.p() == 127 && z == 7) {
    std::vector<uint16_t> e;
    uint16_t v = 2;
    for (unsigned i = 0; i < 7; i++) {
      e.push_back(v);
      v = fp.mul(v, 2);
    }
    return build_restriction(fp, std::move(e));
  }
  if (fp.p() == 3 && z == 2) return build_restriction(fp, {1, 2});
  throw std::runtime_error("no builtin restriction for this field");
}

std::vector<uint16_t> expand_matrix(std::span<const uint8_t> matrix_seed,
                                    const PrimeField& fp, unsigned rows, unsigned cols,
                                    unsigned lambda) {
  Xof xof(lambda, Domain::matrix_expand);
  xof.absorb(matrix_seed);
  BitSource bits(xof);
  std::vector<uint16_t> m(size_t(rows) * cols);
  for (auto& v : m) v = sample_fp(bits, fp);
  return m;
}

RsdpInstance make_instance(const ParamSet& ps, std::span<const uint8_t> matrix_seed,
                           std::vector<uint16_t> s) {
  if (matrix_seed.size() != ps.salt_bytes())
    throw std::runtime_error("matrix seed has wrong length");
  if (s.size() != ps.r()) throw std::runtime_error("syndrome has wrong length");
  PrimeField fp(ps.p);
  RsdpInstance inst{fp, builtin_restriction(fp, ps.z), ps.n, ps.k,
                    expand_matrix(matrix_seed, fp, ps.r(), ps.k, ps.lambda),
                    std::move(s),
                    {matrix_seed.begin(), matrix_seed.end()}};
  return inst;
}

std::pair<RsdpInstance, RsdpWitness> keygen_instance(const ParamSet& ps, Rng& rng) {
  PrimeField fp(ps.p);
  Restriction restr = builtin_restriction(fp, ps.z);
  auto matrix_seed = rng.bytes(ps.salt_bytes());

  // e uniform in E^n, drawn from a seeded XOF stream
  auto wit_seed = rng.bytes(ps.salt_bytes());
  Xof xof(ps.lambda, Domain::witness_expand);
  xof.absorb(wit_seed);
  BitSource bits(xof);
  unsigned idx_bits = std::bit_width(uint32_t(restr.z() - 1));
  std::vector<uint16_t> e(ps.n);
  for (auto& v : e) {
    uint32_t idx;
    do {
      idx = bits.next_bits(idx_bits);
    } while (idx >= restr.z());
    v = restr.elements[idx];
  }

  RsdpInstance inst{fp, std::move(restr), ps.n, ps.k,
                    expand_matrix(matrix_seed, fp, ps.r(), ps.k, ps.lambda),
                    {},
                    std::move(matrix_seed)};
  // s = e_left * A^T + e_right
  inst.s.resize(ps.r());
  for (unsigned i = 0; i < ps.r(); i++) {
    auto row = inst.a_row(i);
    uint32_t acc = e[ps.k + i];
    for (unsigned j = 0; j < ps.k; j++) acc += uint32_t(row[j]) * e[j];
    inst.s[i] = fp.reduce(acc);
  }
  return {std::move(inst), RsdpWitness{{e.begin(), e.begin() + ps.k}}};
}

std::vector<uint16_t> expand_witness(std::span<const uint16_t> w,
                                     const RsdpInstance& inst) {
  if (w.size() != inst.k) throw std::runtime_error("witness has wrong length");
  std::vector<uint16_t> e(w.begin(), w.end());
  e.resize(inst.n);
  for (unsigned i = 0; i < inst.r(); i++) {
    auto row = inst.a_row(i);
    uint32_t acc = 0;
    for (unsigned j = 0; j < inst.k; j++) acc += uint32_t(row[j]) * w[j];
    e[inst.k + i] = inst.fp.sub(inst.s[i], inst.fp.reduce(acc));
  }
  return e;
}

std::vector<uint16_t> evaluate_modeling(std::span<const uint16_t> w,
                                        const RsdpInstance& inst) {
  if (w.size() != inst.k) throw std::runtime_error("witness has wrong length");
  const auto& fe = inst.restriction.fe_coeffs;
  auto horner = [&](uint16_t x) {
    uint16_t acc = fe.back();
    for (size_t i = fe.size() - 1; i-- > 0;)
      acc = inst.fp.add(inst.fp.mul(acc, x), fe[i]);
    return acc;
  };
  std::vector<uint16_t> out(inst.n);
  for (unsigned j = 0; j < inst.k; j++) out[j] = horner(w[j]);
  for (unsigned i = 0; i < inst.r(); i++) {
    auto row = inst.a_row(i);
    uint32_t acc = 0;
    for (unsigned j = 0; j < inst.k; j++) acc += uint32_t(row[j]) * w[j];
    out[inst.k + i] = horner(inst.fp.sub(inst.s[i], inst.fp.reduce(acc)));
  }
  return out;
}

HomogeneousTables homogeneous_tables(const RsdpInstance& inst) {
  const auto& fe = inst.restriction.fe_coeffs;
  unsigned z = inst.restriction.z();
  HomogeneousTables t;
  t.c = fe;
  t.cols = z + 1;
  t.b.assign(size_t(inst.r()) * t.cols, 0);
  for (unsigned i = 0; i < inst.r(); i++) {
    // expand f_E(s_i - y) = sum_m fe[m] * (s_i - y)^m by iterated products
    std::vector<uint16_t> acc(t.cols, 0);
    std::vector<uint16_t> pw{1};  // (s_i - y)^m, ascending in y
    for (unsigned m = 0; m <= z; m++) {
      for (size_t l = 0; l < pw.size(); l++)
        acc[l] = inst.fp.add(acc[l], inst.fp.mul(fe[m], pw[l]));
      if (m == z) break;
      std::vector<uint16_t> nx(pw.size() + 1, 0);
      for (size_t l = 0; l < pw.size(); l++) {
        nx[l] = inst.fp.add(nx[l], inst.fp.mul(pw[l], inst.s[i]));
        nx[l + 1] = inst.fp.sub(nx[l + 1], pw[l]);
      }
      pw = std::move(nx);
    }
    std::copy(acc.begin(), acc.end(), t.b.begin() + size_t(i) * t.cols);
  }
  return t;
}

}  // namespace rsdsig
