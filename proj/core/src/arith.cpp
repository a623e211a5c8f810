#include "zeck/arith.hpp"

#include "zeck/adder.hpp"
#include "zeck/errors.hpp"

namespace zeck {

std::vector<ZeckSeq> fenwick_partials(const ZeckSeq& x, std::size_t count) {
  std::vector<ZeckSeq> partials;
  partials.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) {
      partials.push_back(x);
    } else if (i == 1) {
      partials.push_back(add(x, x));
    } else {
      partials.push_back(add(partials[i - 1], partials[i - 2]));
    }
  }
  return partials;
}

ZeckSeq mul_fenwick(const ZeckSeq& a, const ZeckSeq& b, FenwickStats* stats) {
  FenwickStats local;
  ZeckSeq acc;
  const auto digits = b.digits();
  const std::size_t n = digits.size();
  // Walk b from its F_2 digit upward, keeping only the last two partials.
  ZeckSeq lower;  // P_{k-1}
  ZeckSeq current = a;  // P_k, starting at k = 2
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 1) {
      lower = current;
      current = add(a, a);
      ++local.partial_additions;
    } else if (j > 1) {
      ZeckSeq next = add(current, lower);
      ++local.partial_additions;
      lower = std::move(current);
      current = std::move(next);
    }
    if (digits[n - 1 - j]) {
      acc = add(acc, current);
      ++local.accumulate_additions;
    }
  }
  if (stats) *stats = local;
  return acc;
}

ZeckSeq mul_binary(const ZeckSeq& a, const ZeckSeq& b) {
  return binary_to_zeck(binary::multiply(zeck_to_binary(a), zeck_to_binary(b)));
}

DivRem divrem(const ZeckSeq& x, const ZeckSeq& d) {
  if (d.is_zero()) throw DivisionByZeroError();
  auto [q, r] = binary::divide(zeck_to_binary(x), zeck_to_binary(d));
  return {binary_to_zeck(q), binary_to_zeck(r)};
}

SqrtRem sqrt_rem(const ZeckSeq& x) {
  auto [s, r] = binary::sqrt(zeck_to_binary(x));
  return {binary_to_zeck(s), binary_to_zeck(r)};
}

namespace binary {

BitSeq multiply(const BitSeq& a, const BitSeq& b) {
  const Natural x = a.to_natural();
  const auto bits = b.bits();
  Natural acc = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) acc += x << static_cast<unsigned>(bits.size() - 1 - i);
  }
  return BitSeq::from_natural(acc);
}

QuotRem divide(const BitSeq& x, const BitSeq& d) {
  if (d.is_zero()) throw DivisionByZeroError();
  const Natural divisor = d.to_natural();
  std::vector<Digit> quotient;
  quotient.reserve(x.size());
  Natural rem = 0;
  for (Digit bit : x.bits()) {
    rem <<= 1;
    if (bit) rem |= 1;
    if (rem >= divisor) {
      rem -= divisor;
      quotient.push_back(1);
    } else {
      quotient.push_back(0);
    }
  }
  return {BitSeq::from_bits(std::move(quotient)), BitSeq::from_natural(rem)};
}

RootRem sqrt(const BitSeq& x) {
  const auto bits = x.bits();
  // Consume bit pairs from the top; an odd length gets an implicit leading 0.
  const std::size_t pairs = (bits.size() + 1) / 2;
  const std::size_t lead = pairs * 2 - bits.size();
  Natural root = 0;
  Natural rem = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    unsigned chunk = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      const std::size_t pos = p * 2 + k;
      chunk = chunk * 2 + (pos < lead ? 0 : bits[pos - lead]);
    }
    rem = (rem << 2) | chunk;
    const Natural trial = (root << 2) | 1;
    root <<= 1;
    if (rem >= trial) {
      rem -= trial;
      root |= 1;
    }
  }
  return {BitSeq::from_natural(root), BitSeq::from_natural(rem)};
}

}  // namespace binary

}  // namespace zeck
