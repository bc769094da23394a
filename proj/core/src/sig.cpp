#include "rsdsig/sig.h"

#include <stdexcept>
#include <string>

#include "rsdsig/bits.h"
#include "rsdsig/xof.h"

namespace rsdsig {
namespace sig {

namespace {

void require_tcith(const ParamSet& ps) {
  if (ps.framework != Framework::tcith)
    throw std::runtime_error("parameter set does not support signing");
}

std::vector<uint16_t> unpack_exact(std::span<const uint8_t> bytes, size_t len,
                                   const PrimeField& fp, const char* what) {
  if (bytes.size() != packed_bytes(len, fp.p()))
    throw std::runtime_error(std::string("malformed encoding: ") + what);
  BitReader br(bytes);
  std::vector<uint16_t> v;
  try {
    v = unpack_residues(br, len, fp);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("malformed encoding: ") + what);
  }
  if (!br.rest_is_zero())
    throw std::runtime_error(std::string("malformed encoding: ") + what);
  return v;
}

std::vector<uint16_t> flatten_deltas(const Signature& sig) {
  std::vector<uint16_t> flat;
  for (const auto& d : sig.delta_w) flat.insert(flat.end(), d.begin(), d.end());
  return flat;
}

// Q coefficients as residues: repetition-major, then row, degree, ext coeff
std::vector<uint16_t> flatten_q(const Signature& sig, const ParamSet& ps) {
  std::vector<uint16_t> flat;
  flat.reserve(size_t(ps.tau) * ps.eta * ps.d() * ps.mu);
  for (const auto& q : sig.q)
    for (size_t m = 0; m < q.rows(); m++)
      for (unsigned dd = 0; dd <= q.degree_bound(); dd++)
        for (unsigned c = 0; c < ps.mu; c++) flat.push_back(q.at(m, dd).c[c]);
  return flat;
}

std::vector<uint8_t> root_seed_for(std::span<const uint8_t> aux,
                                   std::span<const uint8_t> salt, unsigned rep,
                                   const ParamSet& ps) {
  Xof xof(ps.lambda, Domain::root_seed);
  xof.absorb(aux);
  xof.absorb(salt);
  xof.absorb_u32(rep);
  return xof.squeeze(ps.seed_bytes());
}

std::vector<uint8_t> challenge1_hash(std::span<const uint8_t> pk,
                                     std::span<const uint8_t> msg,
                                     const Signature& sig,
                                     std::span<const std::vector<uint8_t>> coms,
                                     const ParamSet& ps, const PrimeField& fp) {
  Xof xof(ps.lambda, Domain::challenge1);
  xof.absorb(pk);
  xof.absorb(msg);
  xof.absorb(sig.salt);
  xof.absorb(sig.aux);
  for (const auto& c : coms) xof.absorb(c);
  xof.absorb(pack_residues(flatten_deltas(sig), fp));
  return xof.squeeze(ps.digest_bytes());
}

BatchMatrix gamma_for(std::span<const uint8_t> h1, unsigned rep, const ParamSet& ps,
                      const ExtField& kf) {
  Xof xof(ps.lambda, Domain::batch_expand);
  xof.absorb(h1);
  xof.absorb_u32(rep);
  return sample_batch_matrix(xof, kf, ps.eta, ps.n);
}

bool grinding_ok(std::span<const uint8_t> h2, const ParamSet& ps) {
  uint32_t low = uint32_t(h2[0]) | (uint32_t(h2[1]) << 8);
  return (low & ((uint32_t(1) << ps.w_grind) - 1)) == 0;
}

uint32_t point_index_for(std::span<const uint8_t> h2, unsigned rep, const ParamSet& ps) {
  Xof xof(ps.lambda, Domain::point_expand);
  xof.absorb(h2);
  xof.absorb_u32(rep);
  return piop::verifier_challenge2(xof, ps);
}

}  // namespace

std::pair<SigningKey, VerifyKey> keygen(const ParamSet& ps, Rng& rng) {
  require_tcith(ps);
  auto [inst, wit] = keygen_instance(ps, rng);
  VerifyKey vk{std::move(inst.matrix_seed), std::move(inst.s)};
  return {SigningKey{vk, std::move(wit.w)}, vk};
}

size_t verify_key_bytes(const ParamSet& ps) {
  return ps.salt_bytes() + packed_bytes(ps.r(), ps.p);
}

size_t signing_key_bytes(const ParamSet& ps) {
  return verify_key_bytes(ps) + packed_bytes(ps.k, ps.p);
}

std::vector<uint8_t> encode_verify_key(const VerifyKey& vk, const ParamSet& ps) {
  std::vector<uint8_t> out = vk.matrix_seed;
  auto packed = pack_residues(vk.s, PrimeField(ps.p));
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

VerifyKey decode_verify_key(std::span<const uint8_t> bytes, const ParamSet& ps) {
  if (bytes.size() != verify_key_bytes(ps))
    throw std::runtime_error("malformed encoding: verify key length");
  PrimeField fp(ps.p);
  VerifyKey vk;
  vk.matrix_seed.assign(bytes.begin(), bytes.begin() + ps.salt_bytes());
  vk.s = unpack_exact(bytes.subspan(ps.salt_bytes()), ps.r(), fp, "syndrome");
  return vk;
}

std::vector<uint8_t> encode_signing_key(const SigningKey& sk, const ParamSet& ps) {
  std::vector<uint8_t> out = encode_verify_key(sk.vk, ps);
  auto packed = pack_residues(sk.w, PrimeField(ps.p));
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

SigningKey decode_signing_key(std::span<const uint8_t> bytes, const ParamSet& ps) {
  if (bytes.size() != signing_key_bytes(ps))
    throw std::runtime_error("malformed encoding: signing key length");
  SigningKey sk;
  sk.vk = decode_verify_key(bytes.first(verify_key_bytes(ps)), ps);
  sk.w = unpack_exact(bytes.subspan(verify_key_bytes(ps)), ps.k, PrimeField(ps.p),
                      "witness");
  // honest keys expand to a restricted error vector
  RsdpInstance inst = instance_from_vk(sk.vk, ps);
  for (uint16_t v : evaluate_modeling(sk.w, inst))
    if (v != 0) throw std::runtime_error("signing key is inconsistent");
  return sk;
}

RsdpInstance instance_from_vk(const VerifyKey& vk, const ParamSet& ps) {
  return make_instance(ps, vk.matrix_seed, vk.s);
}

size_t signature_bytes(const ParamSet& ps) {
  size_t bits = 8 * (ps.salt_bytes() + ps.seed_bytes() + ps.digest_bytes() + 4) +
                size_t(ps.tau) * (ps.depth() + 1) * ps.lambda +
                packed_bits(size_t(ps.tau) * ps.k, ps.p) +
                packed_bits(size_t(ps.tau) * ps.eta * ps.d() * ps.mu, ps.p);
  return (bits + 7) / 8;
}

Signature sign(const SigningKey& sk, std::span<const uint8_t> msg, const ParamSet& ps,
               Rng& rng) {
  require_tcith(ps);
  PrimeField fp(ps.p);
  ExtField kf(fp, ps.mu);
  RsdpInstance inst = instance_from_vk(sk.vk, ps);
  HomogeneousTables tables = homogeneous_tables(inst);
  std::vector<uint8_t> pk = encode_verify_key(sk.vk, ps);

  Signature sig;
  sig.salt = rng.bytes(ps.salt_bytes());
  sig.aux = rng.bytes(ps.seed_bytes());

  std::vector<piop::ProverState> states(ps.tau);
  std::vector<std::vector<uint8_t>> coms(ps.tau);
  sig.delta_w.resize(ps.tau);
  for (unsigned j = 0; j < ps.tau; j++) {
    auto root = root_seed_for(sig.aux, sig.salt, j, ps);
    auto r1 = piop::prover_round1(states[j], sk.w, sig.salt, root, ps, kf);
    coms[j] = std::move(r1.com.digest);
    sig.delta_w[j] = std::move(r1.delta_w);
  }

  auto h1 = challenge1_hash(pk, msg, sig, coms, ps, fp);
  sig.q.resize(ps.tau);
  for (unsigned j = 0; j < ps.tau; j++) {
    BatchMatrix gamma = gamma_for(h1, j, ps, kf);
    sig.q[j] = piop::prover_round2(states[j], inst, tables, gamma, ps, kf);
  }

  // grinding: find the smallest counter whose challenge hash ends in w zeros
  Xof base(ps.lambda, Domain::challenge2);
  base.absorb(h1);
  base.absorb(pack_residues(flatten_q(sig, ps), fp));
  for (uint64_t ctr = 0;; ctr++) {
    if (ctr > 0xffffffffULL) throw std::runtime_error("grinding counter exhausted");
    Xof xof = base;
    xof.absorb_u32(uint32_t(ctr));
    auto h2 = xof.squeeze(ps.digest_bytes());
    if (grinding_ok(h2, ps)) {
      sig.ctr = uint32_t(ctr);
      sig.h2 = std::move(h2);
      break;
    }
  }

  sig.openings.resize(ps.tau);
  for (unsigned j = 0; j < ps.tau; j++) {
    uint32_t r_index = point_index_for(sig.h2, j, ps);
    sig.openings[j] = piop::prover_round3(states[j], r_index, ps);
  }
  return sig;
}

bool verify(const VerifyKey& vk, std::span<const uint8_t> msg, const Signature& sig,
            const ParamSet& ps) {
  require_tcith(ps);
  PrimeField fp(ps.p);
  ExtField kf(fp, ps.mu);
  if (sig.salt.size() != ps.salt_bytes() || sig.aux.size() != ps.seed_bytes() ||
      sig.h2.size() != ps.digest_bytes() || sig.delta_w.size() != ps.tau ||
      sig.q.size() != ps.tau || sig.openings.size() != ps.tau)
    return false;
  for (const auto& d : sig.delta_w)
    if (d.size() != ps.k) return false;
  for (const auto& q : sig.q)
    if (q.rows() != ps.eta || q.degree_bound() != ps.d() - 1) return false;
  if (!grinding_ok(sig.h2, ps)) return false;

  RsdpInstance inst = instance_from_vk(vk, ps);
  HomogeneousTables tables = homogeneous_tables(inst);
  std::vector<uint8_t> pk = encode_verify_key(vk, ps);

  // rebuild each repetition's commitment and revealed leaves
  std::vector<std::vector<uint8_t>> coms(ps.tau);
  std::vector<vc::RevealedSeeds> leaves(ps.tau);
  for (unsigned j = 0; j < ps.tau; j++) {
    uint32_t r_index = point_index_for(sig.h2, j, ps);
    try {
      auto [com, seeds] = vc::reconstruct(sig.openings[j], r_index, sig.salt, ps);
      coms[j] = std::move(com.digest);
      leaves[j] = std::move(seeds);
    } catch (const std::exception&) {
      return false;
    }
  }

  // replay the challenge chain
  auto h1 = challenge1_hash(pk, msg, sig, coms, ps, fp);
  Xof xof(ps.lambda, Domain::challenge2);
  xof.absorb(h1);
  xof.absorb(pack_residues(flatten_q(sig, ps), fp));
  xof.absorb_u32(sig.ctr);
  if (xof.squeeze(ps.digest_bytes()) != sig.h2) return false;

  for (unsigned j = 0; j < ps.tau; j++) {
    BatchMatrix gamma = gamma_for(h1, j, ps, kf);
    if (piop::check_relation(leaves[j], sig.delta_w[j], gamma, sig.q[j], sig.salt,
                             inst, tables, ps, kf) != piop::VerifyResult::accept)
      return false;
  }
  return true;
}

std::vector<uint8_t> serialize(const Signature& sig, const ParamSet& ps) {
  PrimeField fp(ps.p);
  BitWriter bw;
  bw.write_bytes(sig.salt);
  bw.write_bytes(sig.aux);
  bw.write_bytes(sig.h2);
  bw.write_bits(sig.ctr, 32);
  for (const auto& op : sig.openings) {
    bw.write_bytes(op.copath);
    bw.write_bytes(op.hidden_com);
  }
  pack_residues(bw, flatten_deltas(sig), fp);
  pack_residues(bw, flatten_q(sig, ps), fp);
  auto out = bw.take();
  if (out.size() != signature_bytes(ps))
    throw std::logic_error("serialized size diverged from the layout");
  return out;
}

Signature deserialize(std::span<const uint8_t> bytes, const ParamSet& ps) {
  require_tcith(ps);
  if (bytes.size() != signature_bytes(ps))
    throw std::runtime_error("malformed encoding: signature length");
  PrimeField fp(ps.p);
  BitReader br(bytes);
  Signature sig;
  sig.salt.resize(ps.salt_bytes());
  br.read_bytes(sig.salt);
  sig.aux.resize(ps.seed_bytes());
  br.read_bytes(sig.aux);
  sig.h2.resize(ps.digest_bytes());
  br.read_bytes(sig.h2);
  sig.ctr = uint32_t(br.read_bits(32));
  sig.openings.resize(ps.tau);
  for (auto& op : sig.openings) {
    op.copath.resize(size_t(ps.depth()) * ps.seed_bytes());
    br.read_bytes(op.copath);
    op.hidden_com.resize(ps.seed_bytes());
    br.read_bytes(op.hidden_com);
  }
  std::vector<uint16_t> deltas, qres;
  try {
    deltas = unpack_residues(br, size_t(ps.tau) * ps.k, fp);
    qres = unpack_residues(br, size_t(ps.tau) * ps.eta * ps.d() * ps.mu, fp);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed encoding: packed residues");
  }
  if (!br.rest_is_zero())
    throw std::runtime_error("malformed encoding: nonzero padding");

  sig.delta_w.assign(ps.tau, {});
  size_t pos = 0;
  for (auto& d : sig.delta_w) {
    d.assign(deltas.begin() + pos, deltas.begin() + pos + ps.k);
    pos += ps.k;
  }
  sig.q.assign(ps.tau, PolyVec(ps.eta, ps.d() - 1));
  pos = 0;
  for (auto& q : sig.q)
    for (size_t m = 0; m < ps.eta; m++)
      for (unsigned dd = 0; dd < ps.d(); dd++)
        for (unsigned c = 0; c < ps.mu; c++) q.at(m, dd).c[c] = qres[pos++];
  return sig;
}

}  // namespace sig
}  // namespace rsdsig
