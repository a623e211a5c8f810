#pragma once

// Fibonacci code streams.
//
// A value n >= 1 is written as its Zeckendorf digits, least significant
// first, followed by one extra 1. The digits never hold two adjacent 1s, so
// the first "11" in the stream ends the codeword.
//
// Byte layout: magic "ZFIB", version byte, value count as 8 bytes big-endian,
// then the concatenated codewords packed most significant bit first and
// zero-padded to a whole byte.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeck/fib.hpp"

namespace zeck {

inline constexpr std::array<std::uint8_t, 4> kCodecMagic{'Z', 'F', 'I', 'B'};
inline constexpr std::uint8_t kCodecVersion = 1;
inline constexpr std::size_t kCodecHeaderSize = 13;

/// Codeword for n as a string of '0'/'1'. Throws DomainError for n = 0.
std::string fibonacci_codeword(const Natural& n);

class BitWriter {
 public:
  void put(bool bit);
  /// Appends a codeword given as '0'/'1' characters.
  void put(std::string_view bits);
  std::size_t bit_count() const noexcept { return bits_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> release() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count);
  std::optional<bool> next();
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_ - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t bits_;
  std::size_t pos_ = 0;
};

struct CodeStream {
  std::uint64_t count = 0;
  std::vector<std::uint8_t> payload;
  /// Meaningful bits in payload; the rest of the last byte is padding.
  std::size_t payload_bits = 0;

  friend bool operator==(const CodeStream&, const CodeStream&) = default;
};

/// Throws DomainError if any value is 0.
CodeStream encode_stream(std::span<const Natural> values);

/// Throws CorruptionError on a truncated codeword, fewer codewords than the
/// count, or non-zero or more than a byte of trailing bits.
std::vector<Natural> decode_stream(const CodeStream& stream);

std::vector<std::uint8_t> serialize(const CodeStream& stream);
/// Checks magic, version and header length (CorruptionError). The payload
/// bit count is taken as the whole payload.
CodeStream parse_code_stream(std::span<const std::uint8_t> bytes);

}  // namespace zeck
