#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsdsig/params.h"
#include "rsdsig/piop.h"
#include "rsdsig/polyrel.h"
#include "rsdsig/rsdp.h"
#include "rsdsig/vc.h"

namespace rsdsig {

class Rng;

namespace sig {

struct VerifyKey {
  std::vector<uint8_t> matrix_seed;  // 2*lambda bits
  std::vector<uint16_t> s;           // syndrome, length n-k
  friend bool operator==(const VerifyKey&, const VerifyKey&) = default;
};

struct SigningKey {
  VerifyKey vk;
  std::vector<uint16_t> w;  // length k
  friend bool operator==(const SigningKey&, const SigningKey&) = default;
};

struct Signature {
  std::vector<uint8_t> salt;  // 2*lambda bits
  std::vector<uint8_t> aux;   // lambda bits
  std::vector<uint8_t> h2;    // 2*lambda bits
  uint32_t ctr = 0;
  std::vector<std::vector<uint16_t>> delta_w;  // tau x k
  std::vector<PolyVec> q;                      // tau entries, eta rows, deg d-1
  std::vector<vc::Opening> openings;           // tau entries
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::pair<SigningKey, VerifyKey> keygen(const ParamSet& ps, Rng& rng);

// pk = matrix_seed || pack(s); sk = pk || pack(w); strict length and
// zero-padding checks on decode
std::vector<uint8_t> encode_verify_key(const VerifyKey& vk, const ParamSet& ps);
VerifyKey decode_verify_key(std::span<const uint8_t> bytes, const ParamSet& ps);
std::vector<uint8_t> encode_signing_key(const SigningKey& sk, const ParamSet& ps);
SigningKey decode_signing_key(std::span<const uint8_t> bytes, const ParamSet& ps);
size_t verify_key_bytes(const ParamSet& ps);
size_t signing_key_bytes(const ParamSet& ps);

// public instance carried by a verify key (A re-expanded from the seed)
RsdpInstance instance_from_vk(const VerifyKey& vk, const ParamSet& ps);

Signature sign(const SigningKey& sk, std::span<const uint8_t> msg, const ParamSet& ps,
               Rng& rng);
bool verify(const VerifyKey& vk, std::span<const uint8_t> msg, const Signature& sig,
            const ParamSet& ps);

size_t signature_bytes(const ParamSet& ps);
std::vector<uint8_t> serialize(const Signature& sig, const ParamSet& ps);
// throws "malformed encoding ..." on any length/padding/range violation
Signature deserialize(std::span<const uint8_t> bytes, const ParamSet& ps);

}  // namespace sig
}  // namespace rsdsig
