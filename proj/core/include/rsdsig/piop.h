#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsdsig/polyrel.h"
#include "rsdsig/rsdp.h"
#include "rsdsig/vc.h"

namespace rsdsig {

class Xof;

namespace piop {

// prover-side session state across the three prover moves
struct ProverState {
  vc::SeedTree tree;
  PolyVec p_w;   // k rows, degree 1
  PolyVec p_u;   // eta rows, degree d-1
  std::vector<uint16_t> delta_w;
};

struct Round1 {
  vc::Commitment com;
  std::vector<uint16_t> delta_w;
};

// commit, derive polynomials, and compute delta_w = w - P_w(inf)
Round1 prover_round1(ProverState& st, std::span<const uint16_t> w,
                     std::span<const uint8_t> salt, std::span<const uint8_t> root_seed,
                     const ParamSet& ps, const ExtField& kf);

BatchMatrix verifier_challenge1(Xof& xof, const ExtField& kf, const ParamSet& ps);

// Q = P_u + Gamma * F(P~_w), truncated to degree d-1
PolyVec prover_round2(const ProverState& st, const RsdpInstance& inst,
                      const HomogeneousTables& tables, const BatchMatrix& gamma,
                      const ParamSet& ps, const ExtField& kf);

// uniform index into Omega by rejection sampling
uint32_t verifier_challenge2(Xof& xof, const ParamSet& ps);

vc::Opening prover_round3(const ProverState& st, uint32_t r_index, const ParamSet& ps);

enum class VerifyResult { accept, bad_opening, relation_check_failed };

// relation check given already-reconstructed leaves (shared with the
// signature verifier, which recomputes the commitment separately)
VerifyResult check_relation(const vc::RevealedSeeds& leaves,
                            std::span<const uint16_t> delta_w, const BatchMatrix& gamma,
                            const PolyVec& q, std::span<const uint8_t> salt,
                            const RsdpInstance& inst, const HomogeneousTables& tables,
                            const ParamSet& ps, const ExtField& kf);

VerifyResult verify(const RsdpInstance& inst, const HomogeneousTables& tables,
                    const vc::Commitment& com, std::span<const uint16_t> delta_w,
                    const BatchMatrix& gamma, const PolyVec& q, uint32_t r_index,
                    const vc::Opening& opening, std::span<const uint8_t> salt,
                    const ParamSet& ps, const ExtField& kf);

}  // namespace piop
}  // namespace rsdsig
