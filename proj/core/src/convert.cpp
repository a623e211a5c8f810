#include "zeck/convert.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "zeck/adder.hpp"
#include "zeck/errors.hpp"

namespace zeck {
namespace {

// Pairwise reduction, one level at a time; an odd element rides up a level
// unchanged.
template <class T, class Add>
T reduce_balanced(std::vector<T> level, Add&& add, TreeShape* shape) {
  TreeShape local;
  local.leaves = level.size();
  if (level.empty()) {
    if (shape) *shape = local;
    return T{};
  }
  while (level.size() > 1) {
    std::vector<T> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(add(level[i], level[i + 1]));
      ++local.additions;
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
    ++local.height;
  }
  if (shape) *shape = local;
  return std::move(level.front());
}

struct Pow2Table {
  std::mutex mutex;
  std::deque<ZeckSeq> values;
};

Pow2Table& pow2_table() {
  static Pow2Table instance;
  return instance;
}

}  // namespace

std::size_t ceil_log2(std::size_t n) {
  std::size_t levels = 0;
  for (std::size_t span = 1; span < n; span <<= 1) ++levels;
  return levels;
}

BitSeq BitSeq::parse(std::string_view text) {
  if (text.empty()) throw ContractError("malformed binary string: empty");
  std::vector<Digit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ContractError("malformed binary string: unexpected character '" + std::string(1, c) +
                          "'");
    }
    bits.push_back(static_cast<Digit>(c - '0'));
  }
  return from_bits(std::move(bits));
}

BitSeq BitSeq::from_bits(std::vector<Digit> bits) {
  if (std::any_of(bits.begin(), bits.end(), [](Digit d) { return d > 1; })) {
    throw ContractError("binary digit outside {0,1}");
  }
  const auto first = std::find(bits.begin(), bits.end(), Digit{1});
  bits.erase(bits.begin(), first);
  BitSeq out;
  out.bits_ = std::move(bits);
  return out;
}

BitSeq BitSeq::from_natural(const Natural& n) {
  if (n < 0) throw DomainError("BitSeq: negative value");
  BitSeq out;
  if (n == 0) return out;
  const std::size_t top = boost::multiprecision::msb(n);
  out.bits_.reserve(top + 1);
  for (std::size_t i = top + 1; i-- > 0;) {
    out.bits_.push_back(boost::multiprecision::bit_test(n, static_cast<unsigned>(i)) ? 1 : 0);
  }
  return out;
}

Natural BitSeq::to_natural() const {
  Natural n = 0;
  const std::size_t len = bits_.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (bits_[i]) boost::multiprecision::bit_set(n, static_cast<unsigned>(len - 1 - i));
  }
  return n;
}

std::string BitSeq::str() const {
  if (bits_.empty()) return "0";
  std::string out;
  out.reserve(bits_.size());
  for (Digit b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

ZeckSeq pow2_zeck(std::size_t i) {
  Pow2Table& t = pow2_table();
  std::lock_guard lock(t.mutex);
  if (t.values.empty()) t.values.push_back(ZeckSeq::parse("1"));
  while (t.values.size() <= i) {
    const ZeckSeq& prev = t.values.back();
    ZeckSeq next = add(prev, prev);
    const Natural power = Natural(1) << t.values.size();
    if (next != greedy_zeckendorf(power)) {
      throw InvariantError("pow2_zeck: doubling disagrees with greedy at 2^" +
                           std::to_string(t.values.size()));
    }
    t.values.push_back(std::move(next));
  }
  return t.values[i];
}

ZeckSeq binary_to_zeck(const BitSeq& b, TreeShape* shape) {
  const auto bits = b.bits();
  const std::size_t n = bits.size();
  std::vector<ZeckSeq> leaves;
  leaves.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    leaves.push_back(bits[pos] ? pow2_zeck(n - 1 - pos) : ZeckSeq{});
  }
  return reduce_balanced(std::move(leaves),
                         [](const ZeckSeq& x, const ZeckSeq& y) { return add(x, y); }, shape);
}

BitSeq zeck_to_binary(const ZeckSeq& z, TreeShape* shape) {
  const auto digits = z.digits();
  const std::size_t n = digits.size();
  std::vector<Natural> leaves;
  leaves.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    leaves.push_back(digits[pos] ? fib(n + 1 - pos) : Natural{0});
  }
  Natural total = reduce_balanced(
      std::move(leaves), [](const Natural& x, const Natural& y) { return Natural(x + y); }, shape);
  return BitSeq::from_natural(total);
}

ZeckSeq to_zeck(const Natural& n) { return binary_to_zeck(BitSeq::from_natural(n)); }

Natural to_natural(const ZeckSeq& z) { return zeck_to_binary(z).to_natural(); }

Natural parse_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ContractError("malformed decimal: '" + std::string(text) + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = text.find_first_not_of('0');
  return first == std::string_view::npos ? Natural(0) : Natural(std::string(text.substr(first)));
}

}  // namespace zeck
