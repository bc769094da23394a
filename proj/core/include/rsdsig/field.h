#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rsdsig/bits.h"

namespace rsdsig {

class Xof;
class BitSource;

// F_p for a small prime p. Residues are uint16_t values in [0, p); inputs
// are assumed reduced.
class PrimeField {
 public:
  explicit PrimeField(uint16_t p);
  uint16_t p() const { return p_; }
  unsigned bits() const { return bits_; }  // ceil(log2 p)

  uint16_t add(uint16_t a, uint16_t b) const {
    uint16_t s = a + b;
    return s >= p_ ? uint16_t(s - p_) : s;
  }
  uint16_t sub(uint16_t a, uint16_t b) const {
    return a >= b ? uint16_t(a - b) : uint16_t(a + p_ - b);
  }
  uint16_t neg(uint16_t a) const { return a == 0 ? 0 : uint16_t(p_ - a); }
  uint16_t mul(uint16_t a, uint16_t b) const {
    return uint16_t(uint32_t(a) * b % p_);
  }
  uint16_t inv(uint16_t a) const;  // throws on 0
  uint16_t pow(uint16_t a, uint64_t e) const;
  uint16_t reduce(uint64_t v) const { return uint16_t(v % p_); }

 private:
  uint16_t p_;
  unsigned bits_;
};

inline constexpr unsigned max_ext_degree = 8;

// Element of the degree-mu extension in the power basis; coefficients at
// index >= mu stay zero so default comparison is semantic equality.
struct ExtElem {
  std::array<uint16_t, max_ext_degree> c{};
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

bool is_irreducible(const PrimeField& fp, std::span<const uint16_t> coeffs);
// smallest monic irreducible of degree mu, ordering coefficient vectors
// (c_0, ..., c_{mu-1}) lexicographically
std::vector<uint16_t> smallest_irreducible(const PrimeField& fp, unsigned mu);

// K = F_p[x] / (modulus), mu <= max_ext_degree. The one-argument form picks
// the smallest irreducible modulus for (p, mu), which is what every builtin
// parameter set uses.
class ExtField {
 public:
  ExtField(const PrimeField& base, unsigned mu);
  ExtField(const PrimeField& base, unsigned mu, std::vector<uint16_t> modulus);

  const PrimeField& base() const { return base_; }
  unsigned degree() const { return mu_; }
  const std::vector<uint16_t>& modulus() const { return modulus_; }  // ascending, monic
  uint64_t order() const;  // p^mu

  ExtElem zero() const { return {}; }
  ExtElem one() const { return embed(1); }
  ExtElem embed(uint16_t a) const;
  bool is_zero(const ExtElem& a) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem scalar_mul(uint16_t s, const ExtElem& a) const;
  ExtElem inv(const ExtElem& a) const;  // throws on zero
  ExtElem pow(const ExtElem& a, uint64_t e) const;

  // index <-> element bijection: base-p digits of the index become the
  // coefficients, low digit first
  ExtElem from_index(uint64_t index) const;
  uint64_t to_index(const ExtElem& a) const;

 private:
  PrimeField base_;
  unsigned mu_;
  std::vector<uint16_t> modulus_;
  // reduction table: row t = x^{mu+t} mod modulus
  std::array<ExtElem, max_ext_degree> red_;
};

// Base-p packed vectors: (v_0, ..., v_{len-1}) is encoded as the integer
// sum v_i p^i written LSB-first in exactly packed_bits(len, p) bits.
unsigned packed_bits(size_t len, uint16_t p);
size_t packed_bytes(size_t len, uint16_t p);
void pack_residues(BitWriter& bw, std::span<const uint16_t> v, const PrimeField& fp);
std::vector<uint8_t> pack_residues(std::span<const uint16_t> v, const PrimeField& fp);
// throws if the encoded integer is >= p^len (non-canonical encoding)
std::vector<uint16_t> unpack_residues(BitReader& br, size_t len, const PrimeField& fp);
std::vector<uint16_t> unpack_residues(std::span<const uint8_t> bytes, size_t len,
                                      const PrimeField& fp);

// rejection samplers drawing ceil(log2 p) bits at a time, LSB-first
uint16_t sample_fp(BitSource& bits, const PrimeField& fp);
ExtElem sample_ext(BitSource& bits, const ExtField& k);

}  // namespace rsdsig
