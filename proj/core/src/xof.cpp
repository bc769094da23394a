#include "rsdsig/xof.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rsdsig {

namespace {

constexpr uint64_t round_constants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

inline uint64_t rotl64(uint64_t x, unsigned s) {
  return (x << s) | (x >> (64 - s));
}

void keccak_f1600(uint64_t s[25]) {
  for (unsigned round = 0; round < 24; round++) {
    // theta
    uint64_t c[5], d[5];
    for (unsigned x = 0; x < 5; x++)
      c[x] = s[x] ^ s[x + 5] ^ s[x + 10] ^ s[x + 15] ^ s[x + 20];
    for (unsigned x = 0; x < 5; x++) {
      d[x] = c[(x + 4) % 5] ^ rotl64(c[(x + 1) % 5], 1);
      for (unsigned y = 0; y < 25; y += 5) s[x + y] ^= d[x];
    }
    // rho + pi
    uint64_t b[25];
    static constexpr unsigned rho[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55,
                                         20, 3,  10, 43, 25, 39, 41, 45, 15,
                                         21, 8,  18, 2,  61, 56, 14};
    for (unsigned x = 0; x < 5; x++)
      for (unsigned y = 0; y < 5; y++)
        b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl64(s[x + 5 * y], rho[x + 5 * y]);
    // chi
    for (unsigned y = 0; y < 25; y += 5)
      for (unsigned x = 0; x < 5; x++)
        s[y + x] = b[y + x] ^ (~b[y + (x + 1) % 5] & b[y + (x + 2) % 5]);
    // iota
    s[0] ^= round_constants[round];
  }
}

}  // namespace

Xof::Xof(unsigned lambda) : rate_(lambda == 128 ? 168 : 136), pos_(0), squeezing_(false) {
  if (lambda != 128 && lambda != 192 && lambda != 256)
    throw std::runtime_error("unsupported security level");
  std::memset(state_, 0, sizeof(state_));
}

Xof::Xof(unsigned lambda, Domain dom) : Xof(lambda) {
  absorb_u8(static_cast<uint8_t>(dom));
}

void Xof::absorb(std::span<const uint8_t> data) {
  if (squeezing_) throw std::logic_error("absorb after squeeze");
  auto* st = reinterpret_cast<uint8_t*>(state_);
  for (uint8_t byte : data) {
    st[pos_++] ^= byte;
    if (pos_ == rate_) {
      keccak_f1600(state_);
      pos_ = 0;
    }
  }
}

void Xof::absorb_u8(uint8_t v) { absorb({&v, 1}); }

void Xof::absorb_u32(uint32_t v) {
  uint8_t le[4] = {uint8_t(v), uint8_t(v >> 8), uint8_t(v >> 16), uint8_t(v >> 24)};
  absorb(le);
}

void Xof::squeeze(std::span<uint8_t> out) {
  auto* st = reinterpret_cast<uint8_t*>(state_);
  if (!squeezing_) {
    st[pos_] ^= 0x1f;  // SHAKE padding
    st[rate_ - 1] ^= 0x80;
    keccak_f1600(state_);
    pos_ = 0;
    squeezing_ = true;
  }
  for (auto& byte : out) {
    if (pos_ == rate_) {
      keccak_f1600(state_);
      pos_ = 0;
    }
    byte = st[pos_++];
  }
}

std::vector<uint8_t> Xof::squeeze(size_t n) {
  std::vector<uint8_t> out(n);
  squeeze(out);
  return out;
}

uint32_t BitSource::next_bits(unsigned n) {
  uint32_t v = 0;
  unsigned got = 0;
  while (got < n) {
    if (avail_ == 0) {
      uint8_t byte;
      xof_.squeeze({&byte, 1});
      buf_ = byte;
      avail_ = 8;
    }
    unsigned take = std::min(n - got, avail_);
    v |= (buf_ & ((1u << take) - 1)) << got;
    buf_ >>= take;
    avail_ -= take;
    got += take;
  }
  return v;
}

std::vector<uint8_t> Rng::bytes(size_t n) {
  std::vector<uint8_t> out(n);
  fill(out);
  return out;
}

void SystemRng::fill(std::span<uint8_t> out) {
  static thread_local std::ifstream urandom("/dev/urandom", std::ios::binary);
  if (!urandom.read(reinterpret_cast<char*>(out.data()), out.size()))
    throw std::runtime_error("system rng unavailable");
}

SeededRng::SeededRng(std::span<const uint8_t> seed, unsigned lambda)
    : xof_(lambda, Domain::rng_stream) {
  xof_.absorb(seed);
}

void SeededRng::fill(std::span<uint8_t> out) { xof_.squeeze(out); }

}  // namespace rsdsig
