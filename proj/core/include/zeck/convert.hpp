#pragma once

// Binary <-> Zeckendorf conversion.
//
// Binary to Zeckendorf feeds Z(2^i) for every set bit i, and zero for every
// clear bit, into a balanced binary tree of Zeckendorf adders. The other
// direction sums the binary values of x_k F_k with a balanced tree of
// ordinary big-integer additions. Both trees have ceil(log2 n) levels for n
// leaves regardless of the digit values.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/digits.hpp"
#include "zeck/fib.hpp"

namespace zeck {

/// Binary digits, most significant first; zero is empty internally, "0" as
/// text. No leading zeros otherwise.
class BitSeq {
 public:
  BitSeq() = default;

  static BitSeq parse(std::string_view text);
  /// Strips leading zeros; throws ContractError on a digit other than 0/1.
  static BitSeq from_bits(std::vector<Digit> bits);
  static BitSeq from_natural(const Natural& n);

  std::span<const Digit> bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool is_zero() const noexcept { return bits_.empty(); }

  Natural to_natural() const;
  std::string str() const;

  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  std::vector<Digit> bits_;
};

/// Shape of a reduction tree: leaves fed in, levels above them, and the
/// number of pairwise additions performed.
struct TreeShape {
  std::size_t leaves = 0;
  std::size_t height = 0;
  std::size_t additions = 0;
};

/// ceil(log2(max(1, n))).
std::size_t ceil_log2(std::size_t n);

/// Z(2^i), built by doubling with the Zeckendorf adder and memoized. Each new
/// entry is checked against greedy_zeckendorf(2^i). Thread-safe.
ZeckSeq pow2_zeck(std::size_t i);

ZeckSeq binary_to_zeck(const BitSeq& b, TreeShape* shape = nullptr);
BitSeq zeck_to_binary(const ZeckSeq& z, TreeShape* shape = nullptr);

/// Convenience wrappers through BitSeq.
ZeckSeq to_zeck(const Natural& n);
Natural to_natural(const ZeckSeq& z);

/// Parses a non-negative decimal integer (digits only).
Natural parse_decimal(std::string_view text);

}  // namespace zeck
