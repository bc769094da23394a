#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rsdsig {

// Bit streams are little-endian inside each byte: bit i of the stream is
// bit (i % 8) of byte (i / 8). A partial final byte is padded with zeros.
class BitWriter {
 public:
  void write_bits(uint64_t v, unsigned n);  // n <= 64; v must fit in n bits
  void write_bytes(std::span<const uint8_t> data);  // must be byte-aligned
  size_t bit_size() const { return bits_; }
  // zero-pads the last byte and hands the buffer over
  std::vector<uint8_t> take();

 private:
  std::vector<uint8_t> buf_;
  size_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> data)
      : data_(data), bit_pos_(0) {}
  uint64_t read_bits(unsigned n);  // n <= 64; throws past end of stream
  void read_bytes(std::span<uint8_t> out);  // must be byte-aligned
  size_t bits_consumed() const { return bit_pos_; }
  size_t bits_left() const { return data_.size() * 8 - bit_pos_; }
  // true iff every bit from the cursor to the end of the buffer is zero
  bool rest_is_zero() const;

 private:
  std::span<const uint8_t> data_;
  size_t bit_pos_;
};

}  // namespace rsdsig
