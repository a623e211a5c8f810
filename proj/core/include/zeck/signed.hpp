#pragma once

// Sign-magnitude Zeckendorf integers.
//
// Opposite-sign addition: subtract digitwise into {-1,0,+1}, orient so the
// leading nonzero digit is +1 (its sign is the sign of the result), then a
// left-to-right width-3 preliminary pass turns the signed digits into a
// {0,1,2} sequence the unsigned adder can finish.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeck/adder.hpp"
#include "zeck/digits.hpp"
#include "zeck/trace.hpp"

namespace zeck {

enum class Sign : std::uint8_t { nonneg, nonpos };

inline Sign flip(Sign s) { return s == Sign::nonneg ? Sign::nonpos : Sign::nonneg; }

class SignedZeck {
 public:
  SignedZeck() = default;
  /// Zero magnitude always gets Sign::nonneg.
  SignedZeck(Sign sign, ZeckSeq magnitude);
  explicit SignedZeck(ZeckSeq magnitude) : magnitude_(std::move(magnitude)) {}

  /// Optional leading '-' or '+', then a canonical digit string.
  static SignedZeck parse(std::string_view text);

  Sign sign() const noexcept { return sign_; }
  const ZeckSeq& magnitude() const noexcept { return magnitude_; }
  bool is_zero() const noexcept { return magnitude_.is_zero(); }

  SignedZeck negated() const { return SignedZeck(flip(sign_), magnitude_); }
  Integer value() const;

  /// "-" prefix for non-positive values; zero prints as "0".
  std::string str() const;

  friend bool operator==(const SignedZeck&, const SignedZeck&) = default;

 private:
  Sign sign_ = Sign::nonneg;
  ZeckSeq magnitude_;
};

/// a - b position by position, right-aligned, with three leading zeros.
TernSeq digitwise_diff(const ZeckSeq& a, const ZeckSeq& b);

/// Sign of the first nonzero digit; if it is -1 every digit is negated so the
/// result leads with +1. All-zero input is reported non-negative.
std::pair<Sign, TernSeq> detect_and_orient(TernSeq t);

/// Requires the first nonzero digit (if any) to be +1 and three leading
/// zeros. Output digits are in {0,1,2}, every 2 flanked by 0s (or ending the
/// sequence after a 0), leading digit 0, same value.
WorkSeq preliminary_pass(TernSeq t, PassTrace* trace = nullptr);

SignedZeck add_signed(const SignedZeck& a, const SignedZeck& b);
SignedZeck subtract(const SignedZeck& a, const SignedZeck& b);

struct SignedAddResult {
  SignedZeck sum;
  /// Passes in execution order: signed_prelim (opposite signs only),
  /// stage1, stage2_rl, stage2_lr.
  std::vector<PassTrace> passes;
};

SignedAddResult add_signed_traced(const SignedZeck& a, const SignedZeck& b,
                                  bool snapshots = false);

/// Exact integer -> signed Zeckendorf via the greedy construction.
SignedZeck signed_greedy(const Integer& v);

}  // namespace zeck
