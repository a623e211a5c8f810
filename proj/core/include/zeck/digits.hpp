#pragma once

// Digit-sequence types shared by every module.
//
// All sequences are stored most-significant digit first. The last digit is
// the coefficient of F_2 (= 1), the one before it of F_3 (= 2), and so on, so
// a sequence of length L has its leading digit at F_{L+1}. The text form is
// the storage order with no separators.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/fib.hpp"

namespace zeck {

using Digit = std::uint8_t;
using SignedDigit = std::int8_t;

/// Text symbol for a digit: '0'..'3', or 'N' for -1.
char digit_char(int digit);

/// Working sequence over {0,1,2,3} used inside the adder passes.
class WorkSeq {
 public:
  WorkSeq() = default;
  /// Throws ContractError if any digit exceeds 3.
  explicit WorkSeq(std::vector<Digit> digits);

  /// Accepts characters '0'..'3' only.
  static WorkSeq parse(std::string_view text);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  std::string str() const;
  std::vector<Digit> release() && { return std::move(digits_); }

  friend bool operator==(const WorkSeq&, const WorkSeq&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Signed-digit sequence over {-1,0,+1}. Text form writes -1 as 'N'.
class TernSeq {
 public:
  TernSeq() = default;
  explicit TernSeq(std::vector<SignedDigit> digits);

  static TernSeq parse(std::string_view text);

  std::span<const SignedDigit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  SignedDigit operator[](std::size_t i) const { return digits_[i]; }

  std::string str() const;
  std::vector<SignedDigit> release() && { return std::move(digits_); }

  friend bool operator==(const TernSeq&, const TernSeq&) = default;

 private:
  std::vector<SignedDigit> digits_;
};

/// Canonical Zeckendorf representation: digits in {0,1}, no two adjacent 1s,
/// no leading zero. Zero is the empty sequence internally and "0" as text.
class ZeckSeq {
 public:
  ZeckSeq() = default;

  /// Strict: rejects leading zeros other than the single "0".
  static ZeckSeq parse(std::string_view text);
  /// Strips leading zeros, then validates.
  static ZeckSeq from_digits(std::vector<Digit> digits);
  static ZeckSeq from_digits(std::span<const Digit> digits);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }

  std::string str() const;
  WorkSeq to_work() const { return WorkSeq(digits_); }

  friend bool operator==(const ZeckSeq&, const ZeckSeq&) = default;

 private:
  explicit ZeckSeq(std::vector<Digit> digits) : digits_(std::move(digits)) {}

  std::vector<Digit> digits_;
};

/// Exact Σ digit_k · F_k.
Integer value(std::span<const Digit> digits);
Integer value(std::span<const SignedDigit> digits);
inline Integer value(const WorkSeq& s) { return value(s.digits()); }
inline Integer value(const TernSeq& s) { return value(s.digits()); }
inline Integer value(const ZeckSeq& s) { return value(s.digits()); }

/// Repeatedly subtracts the largest F_k not exceeding the remainder. This is
/// the reference every other conversion is checked against.
ZeckSeq greedy_zeckendorf(const Natural& n);

/// Describes the first canonicality violation, or nullopt if canonical.
/// Messages: "digit out of range", "adjacent ones", "leading zero".
std::optional<std::string_view> canonical_violation(std::span<const Digit> digits);

bool is_canonical(std::span<const Digit> digits);
inline bool is_canonical(const WorkSeq& s) { return is_canonical(s.digits()); }

}  // namespace zeck
