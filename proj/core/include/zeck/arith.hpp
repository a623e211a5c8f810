#pragma once

// Multiplication, division with remainder and square root with remainder.
//
// mul_fenwick works entirely in Zeckendorf form: the partial products
// P_k = X * F_k follow the Fibonacci recurrence, so one adder call builds
// each, and the product is the sum of P_k over the set digits of Y.
// Everything else converts to binary, runs a schoolbook kernel and converts
// back.

#include <cstddef>
#include <vector>

#include "zeck/convert.hpp"
#include "zeck/digits.hpp"

namespace zeck {

struct FenwickStats {
  std::size_t partial_additions = 0;
  std::size_t accumulate_additions = 0;
  std::size_t total() const { return partial_additions + accumulate_additions; }
};

/// X*F_2, X*F_3, ..., X*F_{count+1}, each built from the previous two.
std::vector<ZeckSeq> fenwick_partials(const ZeckSeq& x, std::size_t count);

ZeckSeq mul_fenwick(const ZeckSeq& a, const ZeckSeq& b, FenwickStats* stats = nullptr);
ZeckSeq mul_binary(const ZeckSeq& a, const ZeckSeq& b);

struct DivRem {
  ZeckSeq quotient;
  ZeckSeq remainder;
};

/// Throws DivisionByZeroError when d is zero.
DivRem divrem(const ZeckSeq& x, const ZeckSeq& d);

struct SqrtRem {
  ZeckSeq root;
  ZeckSeq remainder;
};

SqrtRem sqrt_rem(const ZeckSeq& x);

namespace binary {

/// Shift-and-add over the bits of b.
BitSeq multiply(const BitSeq& a, const BitSeq& b);

struct QuotRem {
  BitSeq quotient;
  BitSeq remainder;
};

/// Restoring long division, one quotient bit per dividend bit.
QuotRem divide(const BitSeq& x, const BitSeq& d);

struct RootRem {
  BitSeq root;
  BitSeq remainder;
};

/// Restoring digit-by-digit square root, two dividend bits per root bit.
RootRem sqrt(const BitSeq& x);

}  // namespace binary

}  // namespace zeck
