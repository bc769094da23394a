#include "rsdsig/vc.h"

#include <cstring>
#include <stdexcept>

#include "rsdsig/xof.h"

namespace rsdsig {
namespace vc {

namespace {

void expand_children(std::span<const uint8_t> salt, uint32_t parent_idx,
                     std::span<const uint8_t> parent, std::span<uint8_t> left,
                     std::span<uint8_t> right, unsigned lambda) {
  Xof xof(lambda, Domain::tree_node);
  xof.absorb(salt);
  xof.absorb_u32(parent_idx);
  xof.absorb(parent);
  xof.squeeze(left);
  xof.squeeze(right);
}

std::vector<uint8_t> leaf_com(std::span<const uint8_t> salt, uint32_t leaf,
                              std::span<const uint8_t> seed, const ParamSet& ps) {
  Xof xof(ps.lambda, Domain::leaf_commit);
  xof.absorb(salt);
  xof.absorb_u32(leaf);
  xof.absorb(seed);
  return xof.squeeze(ps.seed_bytes());
}

Commitment aggregate(std::span<const uint8_t> salt,
                     std::span<const std::vector<uint8_t>> coms, const ParamSet& ps) {
  Xof xof(ps.lambda, Domain::tree_commit);
  xof.absorb(salt);
  for (const auto& c : coms) xof.absorb(c);
  return Commitment{xof.squeeze(ps.digest_bytes())};
}

}  // namespace

ExtElem phi(const ExtField& kf, uint64_t index) { return kf.from_index(index); }

std::pair<SeedTree, Commitment> commit(std::span<const uint8_t> salt,
                                       std::span<const uint8_t> root_seed,
                                       const ParamSet& ps) {
  SeedTree tree;
  tree.salt.assign(salt.begin(), salt.end());
  tree.depth = ps.depth();
  tree.seed_len = unsigned(ps.seed_bytes());
  if (root_seed.size() != tree.seed_len)
    throw std::runtime_error("root seed has wrong length");
  size_t n = tree.leaves();
  tree.nodes.resize((2 * n - 1) * tree.seed_len);
  std::memcpy(tree.nodes.data(), root_seed.data(), tree.seed_len);
  for (size_t idx = 0; idx + 1 < n; idx++) {
    auto* base = tree.nodes.data();
    expand_children(salt, uint32_t(idx), tree.node(idx),
                    {base + (2 * idx + 1) * tree.seed_len, tree.seed_len},
                    {base + (2 * idx + 2) * tree.seed_len, tree.seed_len}, ps.lambda);
  }
  std::vector<std::vector<uint8_t>> coms(n);
  for (size_t i = 0; i < n; i++)
    coms[i] = leaf_com(salt, uint32_t(i), tree.leaf_seed(i), ps);
  return {std::move(tree), aggregate(salt, coms, ps)};
}

LeafData expand_leaf(std::span<const uint8_t> salt, uint32_t leaf,
                     std::span<const uint8_t> seed, const ParamSet& ps,
                     const ExtField& kf) {
  Xof xof(ps.lambda, Domain::leaf_expand);
  xof.absorb(salt);
  xof.absorb_u32(leaf);
  xof.absorb(seed);
  BitSource bits(xof);
  LeafData ld;
  ld.u.resize(ps.k);
  for (auto& v : ld.u) v = sample_fp(bits, kf.base());
  ld.g.resize(size_t(ps.eta) * (ps.d() - 1));
  for (auto& e : ld.g) e = sample_ext(bits, kf);
  return ld;
}

std::pair<PolyVec, PolyVec> derive_polys(const SeedTree& tree, const ParamSet& ps,
                                         const ExtField& kf) {
  PolyVec p_w(ps.k, 1);
  PolyVec p_u(ps.eta, ps.d() - 1);
  unsigned gcols = ps.d() - 1;
  for (size_t i = 0; i < tree.leaves(); i++) {
    LeafData ld = expand_leaf(tree.salt, uint32_t(i), tree.leaf_seed(i), ps, kf);
    ExtElem pt = phi(kf, i);
    ExtElem neg_pt = kf.neg(pt);
    for (unsigned j = 0; j < ps.k; j++) {
      if (ld.u[j] == 0) continue;
      // u (X - phi(i)) adds u at degree 1 and -u*phi(i) at degree 0
      p_w.at(j, 1) = kf.add(p_w.at(j, 1), kf.embed(ld.u[j]));
      p_w.at(j, 0) = kf.add(p_w.at(j, 0), kf.scalar_mul(ld.u[j], neg_pt));
    }
    for (unsigned m = 0; m < ps.eta; m++)
      for (unsigned t = 0; t < gcols; t++) {
        const ExtElem& g = ld.g[size_t(m) * gcols + t];
        p_u.at(m, t + 1) = kf.add(p_u.at(m, t + 1), g);
        p_u.at(m, t) = kf.add(p_u.at(m, t), kf.mul(neg_pt, g));
      }
  }
  return {std::move(p_w), std::move(p_u)};
}

Opening open(const SeedTree& tree, uint32_t hidden, const ParamSet& ps) {
  if (hidden >= tree.leaves()) throw std::runtime_error("leaf index out of range");
  Opening op;
  op.copath.resize(size_t(tree.depth) * tree.seed_len);
  size_t idx = tree.leaves() - 1 + hidden;
  for (unsigned level = tree.depth; level-- > 0;) {
    size_t sibling = (idx % 2 == 1) ? idx + 1 : idx - 1;
    std::memcpy(op.copath.data() + size_t(level) * tree.seed_len,
                tree.node(sibling).data(), tree.seed_len);
    idx = (idx - 1) / 2;
  }
  op.hidden_com = leaf_com(tree.salt, hidden, tree.leaf_seed(hidden), ps);
  return op;
}

std::pair<Commitment, RevealedSeeds> reconstruct(const Opening& opening, uint32_t hidden,
                                                 std::span<const uint8_t> salt,
                                                 const ParamSet& ps) {
  unsigned seed_len = unsigned(ps.seed_bytes());
  unsigned depth = ps.depth();
  size_t n = size_t(1) << depth;
  if (hidden >= n) throw std::runtime_error("leaf index out of range");
  if (opening.copath.size() != size_t(depth) * seed_len ||
      opening.hidden_com.size() != seed_len)
    throw std::runtime_error("malformed opening");

  std::vector<uint8_t> nodes((2 * n - 1) * seed_len);
  std::vector<bool> known(2 * n - 1, false);
  // plant copath siblings along the root->leaf path
  size_t idx = n - 1 + hidden;
  for (unsigned level = depth; level-- > 0;) {
    size_t sibling = (idx % 2 == 1) ? idx + 1 : idx - 1;
    std::memcpy(nodes.data() + sibling * seed_len,
                opening.copath.data() + size_t(level) * seed_len, seed_len);
    known[sibling] = true;
    idx = (idx - 1) / 2;
  }
  for (size_t i = 0; i + 1 < n; i++) {
    if (!known[i]) continue;
    auto* base = nodes.data();
    expand_children(salt, uint32_t(i), {base + i * seed_len, seed_len},
                    {base + (2 * i + 1) * seed_len, seed_len},
                    {base + (2 * i + 2) * seed_len, seed_len}, ps.lambda);
    known[2 * i + 1] = known[2 * i + 2] = true;
  }

  RevealedSeeds rs;
  rs.hidden = hidden;
  rs.seed_len = seed_len;
  rs.seeds.assign(nodes.begin() + (n - 1) * seed_len, nodes.end());
  std::vector<std::vector<uint8_t>> coms(n);
  for (size_t i = 0; i < n; i++)
    coms[i] = i == hidden
                  ? opening.hidden_com
                  : leaf_com(salt, uint32_t(i), rs.seed(i), ps);
  return {aggregate(salt, coms, ps), std::move(rs)};
}

std::optional<RevealedSeeds> verify_open(const Commitment& com, const Opening& opening,
                                         uint32_t hidden, std::span<const uint8_t> salt,
                                         const ParamSet& ps) {
  auto [recomputed, seeds] = reconstruct(opening, hidden, salt, ps);
  if (recomputed.digest != com.digest) return std::nullopt;
  return std::move(seeds);
}

std::pair<std::vector<ExtElem>, std::vector<ExtElem>> eval_from_opening(
    const RevealedSeeds& leaves, std::span<const uint8_t> salt, const ParamSet& ps,
    const ExtField& kf) {
  ExtElem point = phi(kf, leaves.hidden);
  std::vector<ExtElem> pw(ps.k);
  std::vector<ExtElem> pu(ps.eta);
  unsigned gcols = ps.d() - 1;
  size_t n = size_t(1) << ps.depth();
  for (size_t i = 0; i < n; i++) {
    if (i == leaves.hidden) continue;
    LeafData ld = expand_leaf(salt, uint32_t(i), leaves.seed(i), ps, kf);
    ExtElem diff = kf.sub(point, phi(kf, i));
    for (unsigned j = 0; j < ps.k; j++)
      if (ld.u[j] != 0) pw[j] = kf.add(pw[j], kf.scalar_mul(ld.u[j], diff));
    for (unsigned m = 0; m < ps.eta; m++) {
      // g_i row m evaluated at the point, times (point - phi(i))
      ExtElem acc{};
      for (unsigned t = gcols; t-- > 0;)
        acc = kf.add(kf.mul(acc, point), ld.g[size_t(m) * gcols + t]);
      pu[m] = kf.add(pu[m], kf.mul(diff, acc));
    }
  }
  return {std::move(pw), std::move(pu)};
}

}  // namespace vc
}  // namespace rsdsig
