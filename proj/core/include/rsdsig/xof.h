#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rsdsig {

// Domain-separation byte prepended to every hash/XOF input in the scheme.
// Values are part of the wire format and must not be reordered.
enum class Domain : uint8_t {
  tree_node = 0x00,       // parent seed -> child seeds
  leaf_commit = 0x01,     // leaf seed -> leaf commitment
  tree_commit = 0x02,     // leaf commitments -> aggregate commitment
  leaf_expand = 0x03,     // leaf seed -> share material
  matrix_expand = 0x04,   // matrix seed -> public matrix A
  witness_expand = 0x05,  // witness seed -> restricted vector e
  root_seed = 0x06,       // (aux, salt, repetition) -> per-repetition root
  challenge1 = 0x07,      // first Fiat-Shamir hash
  batch_expand = 0x08,    // h1 -> batching matrices
  challenge2 = 0x09,      // second Fiat-Shamir hash (ground)
  point_expand = 0x0a,    // h2 -> evaluation-point indices
  rng_stream = 0x0b,      // seeded deterministic randomness
};

// SHAKE128 for lambda = 128, SHAKE256 for larger lambda. Absorb then
// squeeze; the first squeeze closes the absorb phase and further absorbs
// are rejected.
class Xof {
 public:
  explicit Xof(unsigned lambda);
  Xof(unsigned lambda, Domain dom);

  void absorb(std::span<const uint8_t> data);
  void absorb_u8(uint8_t v);
  void absorb_u32(uint32_t v);  // little-endian
  void squeeze(std::span<uint8_t> out);
  std::vector<uint8_t> squeeze(size_t n);

 private:
  void permute();
  uint64_t state_[25];
  unsigned rate_;  // bytes
  unsigned pos_;
  bool squeezing_;
};

// LSB-first bit stream over an XOF, for fixed-width rejection sampling.
class BitSource {
 public:
  explicit BitSource(Xof& xof) : xof_(xof) {}
  // n <= 32 bits, little-endian within the squeezed byte stream
  uint32_t next_bits(unsigned n);

 private:
  Xof& xof_;
  uint32_t buf_ = 0;
  unsigned avail_ = 0;
};

// Byte source for secret material; either the OS RNG or a seeded XOF.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::span<uint8_t> out) = 0;
  std::vector<uint8_t> bytes(size_t n);
};

class SystemRng final : public Rng {
 public:
  void fill(std::span<uint8_t> out) override;
};

// Deterministic stream: XOF(rng_stream || seed), squeezed on demand.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::span<const uint8_t> seed, unsigned lambda = 256);
  void fill(std::span<uint8_t> out) override;

 private:
  Xof xof_;
};

}  // namespace rsdsig
