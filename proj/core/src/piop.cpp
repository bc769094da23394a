#include "rsdsig/piop.h"

#include <stdexcept>

#include "rsdsig/xof.h"

namespace rsdsig {
namespace piop {

Round1 prover_round1(ProverState& st, std::span<const uint16_t> w,
                     std::span<const uint8_t> salt, std::span<const uint8_t> root_seed,
                     const ParamSet& ps, const ExtField& kf) {
  if (w.size() != ps.k) throw std::runtime_error("witness has wrong length");
  auto [tree, com] = vc::commit(salt, root_seed, ps);
  st.tree = std::move(tree);
  auto [p_w, p_u] = vc::derive_polys(st.tree, ps, kf);
  st.p_w = std::move(p_w);
  st.p_u = std::move(p_u);
  st.delta_w.resize(ps.k);
  const PrimeField& fp = kf.base();
  for (unsigned j = 0; j < ps.k; j++) {
    // leading coefficients of P_w lie in F_p by construction
    st.delta_w[j] = fp.sub(w[j], st.p_w.at(j, 1).c[0]);
  }
  return Round1{std::move(com), st.delta_w};
}

BatchMatrix verifier_challenge1(Xof& xof, const ExtField& kf, const ParamSet& ps) {
  return sample_batch_matrix(xof, kf, ps.eta, ps.n);
}

PolyVec prover_round2(const ProverState& st, const RsdpInstance& inst,
                      const HomogeneousTables& tables, const BatchMatrix& gamma,
                      const ParamSet& ps, const ExtField& kf) {
  PolyVec lifted = lift_witness(kf, st.p_w, st.delta_w);
  PolyVec rel = relation_poly(kf, inst, tables, lifted);
  (void)ps;
  return mask_and_truncate(kf, st.p_u, batch(kf, gamma, rel));
}

uint32_t verifier_challenge2(Xof& xof, const ParamSet& ps) {
  // whole bytes, little-endian, rejection sampled into [N)
  unsigned nbytes = (ps.depth() + 7) / 8;
  for (;;) {
    uint32_t v = 0;
    for (unsigned i = 0; i < nbytes; i++) {
      uint8_t byte;
      xof.squeeze({&byte, 1});
      v |= uint32_t(byte) << (8 * i);
    }
    if (v < ps.big_n) return v;
  }
}

vc::Opening prover_round3(const ProverState& st, uint32_t r_index, const ParamSet& ps) {
  return vc::open(st.tree, r_index, ps);
}

VerifyResult check_relation(const vc::RevealedSeeds& leaves,
                            std::span<const uint16_t> delta_w, const BatchMatrix& gamma,
                            const PolyVec& q, std::span<const uint8_t> salt,
                            const RsdpInstance& inst, const HomogeneousTables& tables,
                            const ParamSet& ps, const ExtField& kf) {
  auto [pw_r, pu_r] = vc::eval_from_opening(leaves, salt, ps, kf);
  ExtElem point = vc::phi(kf, leaves.hidden);
  // E_w(r) = r*delta_w + P_w(r)
  std::vector<ExtElem> ew(ps.k);
  for (unsigned j = 0; j < ps.k; j++)
    ew[j] = kf.add(pw_r[j], kf.scalar_mul(delta_w[j], point));
  std::vector<ExtElem> rel = relation_eval_at(kf, inst, tables, point, ew);
  std::vector<ExtElem> batched = apply_batch_matrix(kf, gamma, rel);
  for (unsigned m = 0; m < ps.eta; m++) {
    ExtElem want = kf.add(pu_r[m], batched[m]);
    if (!(q.eval_row(kf, m, point) == want)) return VerifyResult::relation_check_failed;
  }
  return VerifyResult::accept;
}

VerifyResult verify(const RsdpInstance& inst, const HomogeneousTables& tables,
                    const vc::Commitment& com, std::span<const uint16_t> delta_w,
                    const BatchMatrix& gamma, const PolyVec& q, uint32_t r_index,
                    const vc::Opening& opening, std::span<const uint8_t> salt,
                    const ParamSet& ps, const ExtField& kf) {
  if (delta_w.size() != ps.k || q.rows() != ps.eta || q.degree_bound() != ps.d() - 1)
    return VerifyResult::bad_opening;
  auto leaves = vc::verify_open(com, opening, r_index, salt, ps);
  if (!leaves) return VerifyResult::bad_opening;
  return check_relation(*leaves, delta_w, gamma, q, salt, inst, tables, ps, kf);
}

}  // namespace piop
}  // namespace rsdsig
