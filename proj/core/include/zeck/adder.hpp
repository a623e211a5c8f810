#pragma once

// Unsigned Zeckendorf addition: a carry-free digitwise sum followed by three
// window passes in alternating directions.
//
//   digitwise_sum          a + b position by position, digits {0,1,2}
//   stage1_eliminate       left to right, width 4, removes every 2 (and 3)
//   stage2_right_to_left   right to left, width 3, 011 -> 100
//   stage2_left_to_right   left to right, width 3, 011 -> 100; canonical result
//
// Every pass rewrites one buffer in place and performs exactly
// length - width + 1 window placements.

#include <array>

#include "zeck/digits.hpp"
#include "zeck/trace.hpp"

namespace zeck {

/// Number of zeros prepended beyond the longer operand.
inline constexpr std::size_t kSumPadding = 3;

/// Position-wise sum, right-aligned, with kSumPadding leading zeros.
/// Canonicity of the operands is guaranteed by ZeckSeq.
WorkSeq digitwise_sum(const ZeckSeq& a, const ZeckSeq& b);

/// Requires digits in {0,1,2}, a leading 0, length >= 4, and every 2 preceded
/// by a 0 and followed by a 0 (or by the end of the sequence).
/// Returns a sequence over {0,1} with the same value.
WorkSeq stage1_eliminate(WorkSeq s, PassTrace* trace = nullptr);

/// Requires digits in {0,1}, length >= 3. The result contains no 1011.
WorkSeq stage2_right_to_left(WorkSeq s, PassTrace* trace = nullptr);

/// Requires digits in {0,1}, no 1011, length >= 3. Returns the swept digits
/// without stripping leading zeros; they form a canonical representation.
WorkSeq stage2_left_to_right_digits(WorkSeq s, PassTrace* trace = nullptr);

/// stage2_left_to_right_digits with leading zeros stripped.
ZeckSeq stage2_left_to_right(WorkSeq s, PassTrace* trace = nullptr);

/// Runs stage 1 and both stage-2 passes on a digitwise sum (or on the output
/// of the signed preliminary pass). Sequences shorter than four digits are
/// padded on the left first.
ZeckSeq resolve(WorkSeq sum, std::array<PassTrace, 3>* traces = nullptr);

ZeckSeq add(const ZeckSeq& a, const ZeckSeq& b);

struct AddResult {
  ZeckSeq sum;
  std::array<PassTrace, 3> passes;
};

/// add() with per-pass accounting; `snapshots` also records every firing.
AddResult add_traced(const ZeckSeq& a, const ZeckSeq& b, bool snapshots = false);

}  // namespace zeck
