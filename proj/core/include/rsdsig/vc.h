#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rsdsig/field.h"
#include "rsdsig/params.h"
#include "rsdsig/polyrel.h"

namespace rsdsig {
namespace vc {

// Binary seed tree in heap order (root at 0, children of i at 2i+1/2i+2);
// both children of a node come from one XOF call on (salt, node index, seed).
struct SeedTree {
  std::vector<uint8_t> salt;
  unsigned depth = 0;
  unsigned seed_len = 0;        // bytes per seed
  std::vector<uint8_t> nodes;   // (2N-1) * seed_len

  size_t leaves() const { return size_t(1) << depth; }
  std::span<const uint8_t> node(size_t idx) const {
    return {nodes.data() + idx * seed_len, seed_len};
  }
  std::span<const uint8_t> leaf_seed(size_t leaf) const {
    return node(leaves() - 1 + leaf);
  }
};

struct Commitment {
  std::vector<uint8_t> digest;  // 2*lambda bits
  friend bool operator==(const Commitment&, const Commitment&) = default;
};

// All-but-one opening: copath siblings from root to leaf, then the hidden
// leaf's commitment. lambda*(depth+1) bits on the wire.
struct Opening {
  std::vector<uint8_t> copath;      // depth * seed_len
  std::vector<uint8_t> hidden_com;  // seed_len
  friend bool operator==(const Opening&, const Opening&) = default;
};

// Per-leaf share material: u_i in F_p^k and eta rows of degree <= d-2
// polynomials (for d = 2, constants).
struct LeafData {
  std::vector<uint16_t> u;
  std::vector<ExtElem> g;  // eta * (d-1), row-major
};

// leaf seeds revealed by an opening; the hidden slot is zeroed and unusable
struct RevealedSeeds {
  uint32_t hidden = 0;
  unsigned seed_len = 0;
  std::vector<uint8_t> seeds;  // N * seed_len
  std::span<const uint8_t> seed(size_t leaf) const {
    return {seeds.data() + leaf * seed_len, seed_len};
  }
};

// evaluation-point map: phi(i) has the base-p digits of i as coefficients
ExtElem phi(const ExtField& kf, uint64_t index);

std::pair<SeedTree, Commitment> commit(std::span<const uint8_t> salt,
                                       std::span<const uint8_t> root_seed,
                                       const ParamSet& ps);

LeafData expand_leaf(std::span<const uint8_t> salt, uint32_t leaf,
                     std::span<const uint8_t> seed, const ParamSet& ps,
                     const ExtField& kf);

// (P_w, P_u): P_w(X) = sum_i u_i (X - phi(i)), P_u(X) = sum_i (X - phi(i)) g_i(X)
std::pair<PolyVec, PolyVec> derive_polys(const SeedTree& tree, const ParamSet& ps,
                                         const ExtField& kf);

Opening open(const SeedTree& tree, uint32_t hidden, const ParamSet& ps);

// rebuild every revealed seed and the aggregate commitment from an opening;
// throws on malformed copath sizes
std::pair<Commitment, RevealedSeeds> reconstruct(const Opening& opening, uint32_t hidden,
                                                 std::span<const uint8_t> salt,
                                                 const ParamSet& ps);

// digest comparison on top of reconstruct; nullopt = "invalid opening"
std::optional<RevealedSeeds> verify_open(const Commitment& com, const Opening& opening,
                                         uint32_t hidden, std::span<const uint8_t> salt,
                                         const ParamSet& ps);

// (P_w(phi(hidden)), P_u(phi(hidden))) from the revealed leaves only
std::pair<std::vector<ExtElem>, std::vector<ExtElem>> eval_from_opening(
    const RevealedSeeds& leaves, std::span<const uint8_t> salt, const ParamSet& ps,
    const ExtField& kf);

}  // namespace vc
}  // namespace rsdsig
