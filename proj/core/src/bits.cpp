#include "rsdsig/bits.h"

#include <algorithm>
#include <stdexcept>

namespace rsdsig {

void BitWriter::write_bits(uint64_t v, unsigned n) {
  if (n > 64) throw std::logic_error("bit width out of range");
  if (n < 64 && (v >> n) != 0) throw std::logic_error("value wider than field");
  while (n > 0) {
    unsigned off = bits_ % 8;
    if (off == 0) buf_.push_back(0);
    unsigned take = std::min<unsigned>(n, 8 - off);
    buf_.back() |= uint8_t((v & ((1u << take) - 1)) << off);
    v >>= take;
    bits_ += take;
    n -= take;
  }
}

void BitWriter::write_bytes(std::span<const uint8_t> data) {
  if (bits_ % 8 != 0) throw std::logic_error("unaligned byte write");
  buf_.insert(buf_.end(), data.begin(), data.end());
  bits_ += data.size() * 8;
}

std::vector<uint8_t> BitWriter::take() {
  bits_ = 0;
  return std::move(buf_);
}

uint64_t BitReader::read_bits(unsigned n) {
  if (n > 64) throw std::logic_error("bit width out of range");
  if (n > bits_left()) throw std::runtime_error("bit stream exhausted");
  uint64_t v = 0;
  unsigned got = 0;
  while (got < n) {
    unsigned off = bit_pos_ % 8;
    unsigned take = std::min<unsigned>(n - got, 8 - off);
    uint64_t chunk = (data_[bit_pos_ / 8] >> off) & ((1u << take) - 1);
    v |= chunk << got;
    bit_pos_ += take;
    got += take;
  }
  return v;
}

void BitReader::read_bytes(std::span<uint8_t> out) {
  if (bit_pos_ % 8 != 0) throw std::logic_error("unaligned byte read");
  if (out.size() * 8 > bits_left()) throw std::runtime_error("bit stream exhausted");
  for (auto& byte : out) {
    byte = data_[bit_pos_ / 8];
    bit_pos_ += 8;
  }
}

bool BitReader::rest_is_zero() const {
  size_t pos = bit_pos_;
  while (pos < data_.size() * 8) {
    if (pos % 8 == 0) {
      if (data_[pos / 8] != 0) return false;
      pos += 8;
    } else {
      if ((data_[pos / 8] >> (pos % 8)) != 0) return false;
      pos += 8 - pos % 8;
    }
  }
  return true;
}

}  // namespace rsdsig
