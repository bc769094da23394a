#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsdsig/field.h"
#include "rsdsig/params.h"

namespace rsdsig {

class Rng;

// Restriction E with f_E(x) = prod_{e in E} (x - e), monic, ascending coeffs.
struct Restriction {
  std::vector<uint16_t> elements;
  std::vector<uint16_t> fe_coeffs;
  unsigned z() const { return unsigned(elements.size()); }
};

Restriction build_restriction(const PrimeField& fp, std::vector<uint16_t> elements);
// the two instantiations in use: p=127 -> powers of two (7th roots of unity),
// p=3 -> {1,2}
Restriction builtin_restriction(const PrimeField& fp, unsigned z);

// Public instance with H = (A, I_r) in systematic form.
struct RsdpInstance {
  PrimeField fp;
  Restriction restriction;
  unsigned n = 0, k = 0;
  std::vector<uint16_t> a_mat;       // (n-k) x k, row-major
  std::vector<uint16_t> s;           // syndrome, length n-k
  std::vector<uint8_t> matrix_seed;  // 2*lambda bits; A = XOF(seed)

  unsigned r() const { return n - k; }
  std::span<const uint16_t> a_row(size_t i) const {
    return {a_mat.data() + i * k, k};
  }
};

struct RsdpWitness {
  std::vector<uint16_t> w;  // length k
};

// re-derive A from a matrix seed (row-major rejection sampling)
std::vector<uint16_t> expand_matrix(std::span<const uint8_t> matrix_seed,
                                    const PrimeField& fp, unsigned rows, unsigned cols,
                                    unsigned lambda);
RsdpInstance make_instance(const ParamSet& ps, std::span<const uint8_t> matrix_seed,
                           std::vector<uint16_t> s);
std::pair<RsdpInstance, RsdpWitness> keygen_instance(const ParamSet& ps, Rng& rng);

// e = (w, s - w*A^T); always satisfies e*H^T = s
std::vector<uint16_t> expand_witness(std::span<const uint16_t> w,
                                     const RsdpInstance& inst);
// (f_1(w), ..., f_n(w)): f_j = f_E(w_j) for j < k, f_E(s_i - <a_i, w>) after
std::vector<uint16_t> evaluate_modeling(std::span<const uint16_t> w,
                                        const RsdpInstance& inst);

// Homogenization data: row j < k uses c = f_E coefficients; row k+i uses
// b[i][l] = coefficient of y^l in f_E(s_i - y).
struct HomogeneousTables {
  std::vector<uint16_t> c;  // z+1
  std::vector<uint16_t> b;  // r x (z+1), row-major
  unsigned cols = 0;
  std::span<const uint16_t> b_row(size_t i) const {
    return {b.data() + i * cols, cols};
  }
};

HomogeneousTables homogeneous_tables(const RsdpInstance& inst);

}  // namespace rsdsig
