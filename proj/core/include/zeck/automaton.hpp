#pragma once

// Window passes as finite-state transducers.
//
// A transducer state is the part of the sequence the window still covers:
// after a placement the leftmost window digit is final and is emitted, the
// remaining width-1 digits are pending. Reading the next input digit appends
// it, applies the pass's rule to the last `width` digits, and emits the
// front. Before the window first fills, states hold shorter prefixes and
// emit nothing. Finalization emits the pending digits after the pass's
// end-of-sequence cleanup. Right-to-left passes run the mirrored rule over
// the reversed sequence.
//
// States are found by breadth-first exploration from the empty prefix over
// the input alphabet. A transition that would emit a digit outside the
// output alphabet leads to an absorbing fault state instead.
//
// Because each input digit maps states to states, a run can also be computed
// as a prefix composition of per-digit transition tables: a balanced tree of
// ceil(log2 n) levels, n-1 compositions, then one table lookup per leaf on
// the way down.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zeck/digits.hpp"
#include "zeck/trace.hpp"

namespace zeck {

enum class Direction : std::uint8_t { left_to_right, right_to_left };

using Symbol = std::int8_t;
using StateId = std::uint8_t;

inline constexpr std::size_t kMaxStates = 256;

class Transducer {
 public:
  /// Marks a transition that emits nothing (window still filling).
  static constexpr Symbol kNoEmit = INT8_MIN;

  struct Transition {
    StateId next = 0;
    Symbol emit = kNoEmit;
    bool placement = false;
    bool fired = false;
  };

  struct Final {
    std::vector<Symbol> symbols;
    std::size_t cleanups = 0;
    bool ok = false;
  };

  PassId pass() const noexcept { return pass_; }
  Direction direction() const noexcept { return direction_; }
  std::size_t width() const noexcept { return width_; }
  std::span<const Symbol> input_alphabet() const noexcept { return input_alphabet_; }
  std::span<const Symbol> output_alphabet() const noexcept { return output_alphabet_; }

  std::size_t state_count() const noexcept { return pending_.size(); }
  StateId initial() const noexcept { return 0; }
  bool has_fault_state() const noexcept { return fault_ >= 0; }
  bool is_fault(StateId s) const noexcept { return static_cast<int>(s) == fault_; }
  /// Pending digits a state stands for (empty for the initial and fault states).
  std::span<const Symbol> pending(StateId s) const { return pending_[s]; }

  /// Index of `symbol` in the input alphabet, or -1.
  int symbol_index(Symbol symbol) const noexcept {
    return symbol_index_[static_cast<std::uint8_t>(symbol)];
  }
  const Transition& step(StateId s, std::size_t symbol_idx) const {
    return table_[s * input_alphabet_.size() + symbol_idx];
  }
  const Final& finalization(StateId s) const { return final_[s]; }

  /// Next-state column for one input symbol, indexed by state.
  std::span<const StateId> column(std::size_t symbol_idx) const { return columns_[symbol_idx]; }

 private:
  friend Transducer compile_pass(PassId pass);

  PassId pass_ = PassId::stage1;
  Direction direction_ = Direction::left_to_right;
  std::size_t width_ = 0;
  std::vector<Symbol> input_alphabet_;
  std::vector<Symbol> output_alphabet_;
  std::array<int, 256> symbol_index_{};
  std::vector<std::vector<Symbol>> pending_;
  int fault_ = -1;
  std::vector<Transition> table_;
  std::vector<Final> final_;
  std::vector<std::vector<StateId>> columns_;
};

/// Throws InvariantError if exploration exceeds kMaxStates.
Transducer compile_pass(PassId pass);

/// Compiled once per process and cached.
const Transducer& transducer_for(PassId pass);

struct CostReport {
  PassId pass = PassId::stage1;
  std::size_t length = 0;
  std::size_t transitions = 0;
  std::size_t placements = 0;
  std::size_t firings = 0;
  std::size_t cleanups = 0;
  // Prefix runs only.
  std::size_t compositions = 0;
  std::size_t tree_height = 0;
  std::size_t chunk = 0;
};

struct RunResult {
  std::vector<Symbol> digits;
  CostReport cost;
};

inline const CostReport& cost_report(const RunResult& run) { return run.cost; }

/// Digits are given and returned most significant first for either direction.
/// Throws ContractError for an input shorter than the window or a symbol
/// outside the input alphabet, InvariantError if the run faults.
RunResult run_scan(const Transducer& t, std::span<const Symbol> digits);

/// Same result as run_scan for every chunk size. `chunk` is the number of
/// tree nodes handled per task at each level; `threads` > 1 evaluates a
/// level's tasks concurrently.
RunResult run_parallel_prefix(const Transducer& t, std::span<const Symbol> digits,
                              std::size_t chunk, unsigned threads = 1);

std::vector<Symbol> to_symbols(const WorkSeq& s);
std::vector<Symbol> to_symbols(const TernSeq& s);
/// Throws ContractError on a negative or >3 symbol.
WorkSeq to_work(std::span<const Symbol> symbols);

/// The in-place window pass for `pass` (stage2_lr without stripping), on
/// symbol vectors, so transducer runs can be compared against it directly.
std::vector<Symbol> direct_pass(PassId pass, std::span<const Symbol> digits);

}  // namespace zeck
