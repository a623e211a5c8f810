#include "zeck/digits.hpp"

#include <algorithm>
#include <utility>

#include "zeck/errors.hpp"

namespace zeck {
namespace {

std::vector<Digit> parse_unsigned(std::string_view text, char max_char) {
  std::vector<Digit> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > max_char) {
      throw ContractError("malformed digit string: unexpected character '" + std::string(1, c) +
                          "'");
    }
    out.push_back(static_cast<Digit>(c - '0'));
  }
  return out;
}

// Weighted sums over a block whose last digit sits at F_2: returns
// (Σ d_k F_k, Σ d_k F_{k-1}). Keeping both lets blocks be stitched with
// F_{a+b} = F_a F_{b+1} + F_{a-1} F_b.
constexpr std::size_t kSmallBlock = 40;  // 3 * F_42 fits easily in int64

template <class D>
std::pair<Integer, Integer> weighted_pair(std::span<const D> digits) {
  if (digits.size() <= kSmallBlock) {
    std::int64_t v = 0;
    std::int64_t v_prev = 0;
    for (D d : digits) {
      const std::int64_t next = v + v_prev + d;
      v_prev = v + d;
      v = next;
    }
    return {Integer(v), Integer(v_prev)};
  }
  const std::size_t low_len = digits.size() / 2;
  const auto high = digits.first(digits.size() - low_len);
  const auto low = digits.last(low_len);
  auto [a, b] = weighted_pair(high);
  auto [c, d] = weighted_pair(low);
  const Natural& f_m1 = detail::fib_any(low_len + 1);
  const Natural& f_m = detail::fib_any(low_len);
  const Natural& f_m0 = detail::fib_any(low_len - 1);
  Integer v = a * f_m1 + b * f_m + c;
  Integer v_prev = a * f_m + b * f_m0 + d;
  return {std::move(v), std::move(v_prev)};
}

}  // namespace

char digit_char(int digit) {
  if (digit == -1) return 'N';
  if (digit >= 0 && digit <= 9) return static_cast<char>('0' + digit);
  return '?';
}

WorkSeq::WorkSeq(std::vector<Digit> digits) : digits_(std::move(digits)) {
  if (std::any_of(digits_.begin(), digits_.end(), [](Digit d) { return d > 3; })) {
    throw ContractError("working digit outside {0,1,2,3}");
  }
}

WorkSeq WorkSeq::parse(std::string_view text) { return WorkSeq(parse_unsigned(text, '3')); }

std::string WorkSeq::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (Digit d : digits_) out.push_back(digit_char(d));
  return out;
}

TernSeq::TernSeq(std::vector<SignedDigit> digits) : digits_(std::move(digits)) {
  if (std::any_of(digits_.begin(), digits_.end(), [](SignedDigit d) { return d < -1 || d > 1; })) {
    throw ContractError("signed digit outside {-1,0,+1}");
  }
}

TernSeq TernSeq::parse(std::string_view text) {
  std::vector<SignedDigit> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': out.push_back(0); break;
      case '1': out.push_back(1); break;
      case 'N': out.push_back(-1); break;
      default:
        throw ContractError("malformed signed digit string: unexpected character '" +
                            std::string(1, c) + "'");
    }
  }
  return TernSeq(std::move(out));
}

std::string TernSeq::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (SignedDigit d : digits_) out.push_back(digit_char(d));
  return out;
}

ZeckSeq ZeckSeq::parse(std::string_view text) {
  if (text.empty()) throw ContractError("malformed digit string: empty");
  if (text == "0") return ZeckSeq{};
  auto digits = parse_unsigned(text, '9');
  if (auto why = canonical_violation(digits)) {
    throw ContractError("non-canonical: " + std::string(*why));
  }
  return ZeckSeq(std::move(digits));
}

ZeckSeq ZeckSeq::from_digits(std::vector<Digit> digits) {
  const auto first = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
  digits.erase(digits.begin(), first);
  if (auto why = canonical_violation(digits)) {
    throw ContractError("non-canonical: " + std::string(*why));
  }
  return ZeckSeq(std::move(digits));
}

ZeckSeq ZeckSeq::from_digits(std::span<const Digit> digits) {
  return from_digits(std::vector<Digit>(digits.begin(), digits.end()));
}

std::string ZeckSeq::str() const {
  if (digits_.empty()) return "0";
  std::string out;
  out.reserve(digits_.size());
  for (Digit d : digits_) out.push_back(digit_char(d));
  return out;
}

Integer value(std::span<const Digit> digits) { return weighted_pair(digits).first; }

Integer value(std::span<const SignedDigit> digits) { return weighted_pair(digits).first; }

ZeckSeq greedy_zeckendorf(const Natural& n) {
  if (n < 0) throw DomainError("greedy_zeckendorf: negative argument");
  if (n == 0) return ZeckSeq{};
  std::size_t top = 2;
  while (fib(top + 1) <= n) ++top;
  std::vector<Digit> digits;
  digits.reserve(top - 1);
  Natural rest = n;
  for (std::size_t k = top; k >= 2; --k) {
    const Natural& f = fib(k);
    if (f <= rest) {
      rest -= f;
      digits.push_back(1);
    } else {
      digits.push_back(0);
    }
  }
  return ZeckSeq::from_digits(std::move(digits));
}

std::optional<std::string_view> canonical_violation(std::span<const Digit> digits) {
  for (Digit d : digits) {
    if (d > 1) return "digit out of range";
  }
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] == 1 && digits[i - 1] == 1) return "adjacent ones";
  }
  if (digits.size() > 1 && digits.front() == 0) return "leading zero";
  return std::nullopt;
}

bool is_canonical(std::span<const Digit> digits) { return !canonical_violation(digits); }

}  // namespace zeck
