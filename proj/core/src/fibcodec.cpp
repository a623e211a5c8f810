#include "zeck/fibcodec.hpp"

#include <algorithm>

#include "zeck/convert.hpp"
#include "zeck/digits.hpp"
#include "zeck/errors.hpp"

namespace zeck {

std::string fibonacci_codeword(const Natural& n) {
  if (n <= 0) throw DomainError("Fibonacci code is defined for values >= 1");
  const ZeckSeq z = to_zeck(n);
  const auto digits = z.digits();
  std::string word;
  word.reserve(digits.size() + 1);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) word.push_back(*it ? '1' : '0');
  word.push_back('1');
  return word;
}

void BitWriter::put(bool bit) {
  if (bits_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
  ++bits_;
}

void BitWriter::put(std::string_view bits) {
  for (char c : bits) put(c == '1');
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count)
    : bytes_(bytes), bits_(std::min(bit_count, bytes.size() * 8)) {}

std::optional<bool> BitReader::next() {
  if (pos_ >= bits_) return std::nullopt;
  const bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
  ++pos_;
  return bit;
}

CodeStream encode_stream(std::span<const Natural> values) {
  BitWriter writer;
  for (const Natural& v : values) writer.put(fibonacci_codeword(v));
  CodeStream out;
  out.count = values.size();
  out.payload_bits = writer.bit_count();
  out.payload = std::move(writer).release();
  return out;
}

std::vector<Natural> decode_stream(const CodeStream& stream) {
  if (stream.payload_bits > stream.payload.size() * 8) {
    throw CorruptionError("payload shorter than its bit count");
  }
  BitReader reader(stream.payload, stream.payload_bits);
  std::vector<Natural> values;
  // A codeword takes at least two bits, which bounds a corrupt count.
  values.reserve(std::min<std::uint64_t>(stream.count, stream.payload_bits / 2));
  std::vector<Digit> digits;  // least significant first
  for (std::uint64_t i = 0; i < stream.count; ++i) {
    digits.clear();
    bool previous = false;
    for (;;) {
      const auto bit = reader.next();
      if (!bit) {
        throw CorruptionError(digits.empty() ? "count mismatch: stream holds " +
                                                   std::to_string(i) + " of " +
                                                   std::to_string(stream.count) + " values"
                                             : "truncated codeword at end of stream");
      }
      if (*bit && previous) break;
      digits.push_back(*bit ? 1 : 0);
      previous = *bit;
    }
    std::reverse(digits.begin(), digits.end());
    values.push_back(value(digits));
  }
  if (reader.remaining() >= 8) throw CorruptionError("count mismatch: trailing codewords");
  while (auto bit = reader.next()) {
    if (*bit) throw CorruptionError("count mismatch: non-zero padding");
  }
  return values;
}

std::vector<std::uint8_t> serialize(const CodeStream& stream) {
  std::vector<std::uint8_t> out(kCodecMagic.begin(), kCodecMagic.end());
  out.push_back(kCodecVersion);
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(stream.count >> shift));
  }
  out.insert(out.end(), stream.payload.begin(), stream.payload.end());
  return out;
}

CodeStream parse_code_stream(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kCodecHeaderSize) throw CorruptionError("truncated header");
  if (!std::equal(kCodecMagic.begin(), kCodecMagic.end(), bytes.begin())) {
    throw CorruptionError("bad magic");
  }
  if (bytes[4] != kCodecVersion) {
    throw CorruptionError("unsupported version " + std::to_string(bytes[4]));
  }
  CodeStream out;
  for (std::size_t i = 5; i < kCodecHeaderSize; ++i) out.count = (out.count << 8) | bytes[i];
  out.payload.assign(bytes.begin() + kCodecHeaderSize, bytes.end());
  out.payload_bits = out.payload.size() * 8;
  return out;
}

}  // namespace zeck
