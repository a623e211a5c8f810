#pragma once

// Random operands and per-pass inputs for tests and benchmarks.

#include <cstddef>
#include <random>
#include <vector>

#include "zeck/automaton.hpp"
#include "zeck/digits.hpp"
#include "zeck/trace.hpp"

namespace zeck {

using Rng = std::mt19937_64;

/// Canonical digits of exactly `length` positions (top digit 1 when
/// length > 0), uniform over such strings.
ZeckSeq random_zeck(Rng& rng, std::size_t length);

/// Uniform natural below F_{max_digits+2}, i.e. up to max_digits digits.
ZeckSeq random_zeck_upto(Rng& rng, std::size_t max_digits);

/// A `length`-digit input satisfying the pass precondition, most
/// significant first:
///   stage1         digitwise sum of two canonical operands, 0-padded
///   stage2_rl      random bits behind a leading 0
///   stage2_lr      stage2_rl applied to such bits
///   signed_prelim  oriented digitwise difference, 0-padded
/// Throws ContractError if length is below the pass's window width.
std::vector<Symbol> random_pass_input(PassId pass, Rng& rng, std::size_t length);

}  // namespace zeck
