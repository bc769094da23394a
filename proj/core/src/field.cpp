#include "rsdsig/field.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rsdsig/xof.h"

namespace rsdsig {

namespace {

bool is_small_prime(uint16_t p) {
  if (p < 2) return false;
  for (uint32_t q = 2; q * q <= p; q++)
    if (p % q == 0) return false;
  return true;
}

// remainder of a / b over F_p, both ascending-coefficient, b monic
std::vector<uint16_t> poly_rem(std::vector<uint16_t> a,
                               std::span<const uint16_t> b,
                               const PrimeField& fp) {
  while (a.size() >= b.size()) {
    uint16_t lead = a.back();
    if (lead == 0) {
      a.pop_back();
      continue;
    }
    size_t off = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); i++)
      a[off + i] = fp.sub(a[off + i], fp.mul(lead, b[i]));
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

PrimeField::PrimeField(uint16_t p) : p_(p) {
  if (p >= 256 || !is_small_prime(p))
    throw std::runtime_error("modulus must be a prime below 2^8");
  bits_ = std::bit_width(uint32_t(p - 1));
}

uint16_t PrimeField::inv(uint16_t a) const {
  if (a == 0) throw std::runtime_error("zero has no inverse");
  return pow(a, p_ - 2);
}

uint16_t PrimeField::pow(uint16_t a, uint64_t e) const {
  uint16_t acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool is_irreducible(const PrimeField& fp, std::span<const uint16_t> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1)
    throw std::runtime_error("modulus must be monic of degree >= 1");
  size_t deg = coeffs.size() - 1;
  if (deg == 1) return true;
  if (coeffs[0] == 0) return false;  // divisible by x
  uint16_t p = fp.p();
  // no monic divisor of degree 1 .. deg/2 (sizes here are tiny)
  for (size_t d = 1; d <= deg / 2; d++) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; i++) count *= p;
    for (uint64_t v = 0; v < count; v++) {
      std::vector<uint16_t> g(d + 1, 1);
      uint64_t t = v;
      for (size_t i = 0; i < d; i++) {
        g[i] = uint16_t(t % p);
        t /= p;
      }
      if (poly_rem({coeffs.begin(), coeffs.end()}, g, fp).empty()) return false;
    }
  }
  return true;
}

std::vector<uint16_t> smallest_irreducible(const PrimeField& fp, unsigned mu) {
  // candidates ordered by the integer value sum c_i p^i of the low part
  uint64_t count = 1;
  for (unsigned i = 0; i < mu; i++) count *= fp.p();
  for (uint64_t v = 0; v < count; v++) {
    std::vector<uint16_t> f(mu + 1, 1);
    uint64_t t = v;
    for (unsigned i = 0; i < mu; i++) {
      f[i] = uint16_t(t % fp.p());
      t /= fp.p();
    }
    if (is_irreducible(fp, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

ExtField::ExtField(const PrimeField& base, unsigned mu)
    : ExtField(base, mu, smallest_irreducible(base, mu)) {}

ExtField::ExtField(const PrimeField& base, unsigned mu, std::vector<uint16_t> modulus)
    : base_(base), mu_(mu), modulus_(std::move(modulus)) {
  if (mu_ == 0 || mu_ > max_ext_degree)
    throw std::runtime_error("unsupported extension degree");
  if (modulus_.size() != mu_ + 1 || !is_irreducible(base_, modulus_))
    throw std::runtime_error("modulus is not a monic irreducible of the right degree");
  // red_[t] = x^{mu+t} reduced; built by multiplying the previous row by x
  ExtElem row;
  for (unsigned i = 0; i < mu_; i++) row.c[i] = base_.neg(modulus_[i]);
  red_[0] = row;
  for (unsigned t = 1; t + 1 < mu_; t++) {
    ExtElem next{};
    uint16_t carry = row.c[mu_ - 1];
    for (unsigned i = mu_ - 1; i > 0; i--) next.c[i] = row.c[i - 1];
    next.c[0] = 0;
    for (unsigned i = 0; i < mu_; i++)
      next.c[i] = base_.add(next.c[i], base_.mul(carry, red_[0].c[i]));
    red_[t] = next;
    row = next;
  }
}

uint64_t ExtField::order() const {
  uint64_t o = 1;
  for (unsigned i = 0; i < mu_; i++) o *= base_.p();
  return o;
}

ExtElem ExtField::embed(uint16_t a) const {
  ExtElem e{};
  e.c[0] = a;
  return e;
}

bool ExtField::is_zero(const ExtElem& a) const { return a == ExtElem{}; }

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r{};
  for (unsigned i = 0; i < mu_; i++) r.c[i] = base_.add(a.c[i], b.c[i]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r{};
  for (unsigned i = 0; i < mu_; i++) r.c[i] = base_.sub(a.c[i], b.c[i]);
  return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r{};
  for (unsigned i = 0; i < mu_; i++) r.c[i] = base_.neg(a.c[i]);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  // schoolbook with deferred reduction; products fit easily in 32 bits
  uint32_t acc[2 * max_ext_degree - 1] = {};
  for (unsigned i = 0; i < mu_; i++) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < mu_; j++) acc[i + j] += uint32_t(a.c[i]) * b.c[j];
  }
  for (unsigned t = mu_; t <= 2 * mu_ - 2 && mu_ > 1; t++) {
    uint32_t hi = acc[t] % base_.p();
    if (hi == 0) continue;
    const ExtElem& row = red_[t - mu_];
    for (unsigned i = 0; i < mu_; i++) acc[i] += hi * row.c[i];
  }
  ExtElem r{};
  for (unsigned i = 0; i < mu_; i++) r.c[i] = base_.reduce(acc[i]);
  return r;
}

ExtElem ExtField::scalar_mul(uint16_t s, const ExtElem& a) const {
  ExtElem r{};
  for (unsigned i = 0; i < mu_; i++) r.c[i] = base_.mul(s, a.c[i]);
  return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (is_zero(a)) throw std::runtime_error("zero has no inverse");
  // a^(q-2) for q = p^mu; mu <= 8 and p < 2^16 keep q-2 inside uint64
  return pow(a, order() - 2);
}

ExtElem ExtField::pow(const ExtElem& a, uint64_t e) const {
  ExtElem acc = one();
  ExtElem base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

ExtElem ExtField::from_index(uint64_t index) const {
  ExtElem e{};
  for (unsigned i = 0; i < mu_; i++) {
    e.c[i] = uint16_t(index % base_.p());
    index /= base_.p();
  }
  if (index != 0) throw std::runtime_error("index outside the field");
  return e;
}

uint64_t ExtField::to_index(const ExtElem& a) const {
  uint64_t v = 0;
  for (unsigned i = mu_; i-- > 0;) v = v * base_.p() + a.c[i];
  return v;
}

unsigned packed_bits(size_t len, uint16_t p) {
  if (len == 0) return 0;
  return unsigned(std::ceil(double(len) * std::log2(double(p))));
}

size_t packed_bytes(size_t len, uint16_t p) { return (packed_bits(len, p) + 7) / 8; }

void pack_residues(BitWriter& bw, std::span<const uint16_t> v, const PrimeField& fp) {
  // big integer sum v_i p^i via Horner from the top
  std::vector<uint32_t> limbs{0};
  for (size_t i = v.size(); i-- > 0;) {
    uint32_t carry = v[i];
    if (v[i] >= fp.p()) throw std::logic_error("residue out of range");
    for (auto& limb : limbs) {
      uint64_t t = uint64_t(limb) * fp.p() + carry;
      limb = uint32_t(t);
      carry = uint32_t(t >> 32);
    }
    if (carry) limbs.push_back(carry);
  }
  unsigned total = packed_bits(v.size(), fp.p());
  for (unsigned bit = 0; bit < total; bit += 32) {
    unsigned take = std::min(32u, total - bit);
    uint32_t word = bit / 32 < limbs.size() ? limbs[bit / 32] : 0;
    bw.write_bits(word & (take == 32 ? ~uint32_t(0) : ((1u << take) - 1)), take);
  }
}

std::vector<uint8_t> pack_residues(std::span<const uint16_t> v, const PrimeField& fp) {
  BitWriter bw;
  pack_residues(bw, v, fp);
  return bw.take();
}

std::vector<uint16_t> unpack_residues(BitReader& br, size_t len, const PrimeField& fp) {
  unsigned total = packed_bits(len, fp.p());
  std::vector<uint32_t> limbs((total + 31) / 32, 0);
  for (unsigned bit = 0; bit < total; bit += 32) {
    unsigned take = std::min(32u, total - bit);
    limbs[bit / 32] = uint32_t(br.read_bits(take));
  }
  std::vector<uint16_t> v(len);
  for (size_t i = 0; i < len; i++) {
    // divide the big integer by p; remainder is the next residue
    uint32_t rem = 0;
    for (size_t j = limbs.size(); j-- > 0;) {
      uint64_t cur = (uint64_t(rem) << 32) | limbs[j];
      limbs[j] = uint32_t(cur / fp.p());
      rem = uint32_t(cur % fp.p());
    }
    v[i] = uint16_t(rem);
  }
  for (uint32_t limb : limbs)
    if (limb != 0) throw std::runtime_error("invalid packed vector");
  return v;
}

std::vector<uint16_t> unpack_residues(std::span<const uint8_t> bytes, size_t len,
                                      const PrimeField& fp) {
  BitReader br(bytes);
  return unpack_residues(br, len, fp);
}

uint16_t sample_fp(BitSource& bits, const PrimeField& fp) {
  for (;;) {
    uint32_t v = bits.next_bits(fp.bits());
    if (v < fp.p()) return uint16_t(v);
  }
}

ExtElem sample_ext(BitSource& bits, const ExtField& k) {
  ExtElem e{};
  for (unsigned i = 0; i < k.degree(); i++) e.c[i] = sample_fp(bits, k.base());
  return e;
}

}  // namespace rsdsig
