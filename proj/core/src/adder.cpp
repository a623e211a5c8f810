#include "zeck/adder.hpp"

#include <algorithm>
#include <string>

#include "rules.hpp"
#include "zeck/errors.hpp"

namespace zeck {
namespace {

std::string render(const Digit* first, std::size_t count) {
  std::string out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(digit_char(first[i]));
  return out;
}

void start_trace(PassTrace* trace, PassId pass, std::size_t length) {
  if (!trace) return;
  trace->pass = pass;
  trace->length = length;
  trace->steps = 0;
  trace->firings = 0;
  trace->cleanups = 0;
  trace->snapshots.clear();
}

// Records a rewrite of `width` digits at `offset`; `before` is captured by the
// caller only when snapshots are on.
void note(PassTrace* trace, std::size_t offset, const char* rule, std::string before,
          const Digit* window, std::size_t width) {
  if (!trace || !trace->record) return;
  trace->snapshots.push_back(Firing{offset, rule, std::move(before), render(window, width)});
}

void require_binary(const std::vector<Digit>& s, const char* pass) {
  if (std::any_of(s.begin(), s.end(), [](Digit d) { return d > 1; })) {
    throw ContractError(std::string(pass) + ": digits must be 0 or 1");
  }
}

bool contains_1011(const std::vector<Digit>& s) {
  for (std::size_t i = 0; i + 4 <= s.size(); ++i) {
    if (s[i] == 1 && s[i + 1] == 0 && s[i + 2] == 1 && s[i + 3] == 1) return true;
  }
  return false;
}

void sweep_stage2(std::vector<Digit>& s, bool right_to_left, PassTrace* trace) {
  const std::size_t n = s.size();
  const std::size_t placements = n - 2;
  const bool recording = trace && trace->record;
  for (std::size_t step = 0; step < placements; ++step) {
    const std::size_t i = right_to_left ? placements - 1 - step : step;
    Digit* w = s.data() + i;
    std::string before = recording ? render(w, 3) : std::string{};
    if (detail::stage2_rule(w)) {
      if (trace) ++trace->firings;
      note(trace, i, "011", std::move(before), w, 3);
    }
  }
  if (trace) trace->steps = placements;
}

}  // namespace

WorkSeq digitwise_sum(const ZeckSeq& a, const ZeckSeq& b) {
  const std::size_t len = std::max(a.size(), b.size()) + kSumPadding;
  std::vector<Digit> out(len, 0);
  for (const ZeckSeq* operand : {&a, &b}) {
    const auto digits = operand->digits();
    const std::size_t offset = len - digits.size();
    for (std::size_t i = 0; i < digits.size(); ++i) out[offset + i] += digits[i];
  }
  return WorkSeq(std::move(out));
}

WorkSeq stage1_eliminate(WorkSeq input, PassTrace* trace) {
  std::vector<Digit> s = std::move(input).release();
  const std::size_t n = s.size();
  if (n < 4) throw ContractError("stage1: sequence shorter than the window");
  if (s.front() != 0) throw ContractError("stage1: sequence must begin with 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] > 2) throw ContractError("stage1: digits must be 0, 1 or 2");
    if (s[i] == 2 && (s[i - 1] != 0 || (i + 1 < n && s[i + 1] != 0))) {
      throw ContractError("stage1: every 2 must be flanked by 0s");
    }
  }

  start_trace(trace, PassId::stage1, n);
  const bool recording = trace && trace->record;
  const std::size_t placements = n - 3;
  for (std::size_t i = 0; i < placements; ++i) {
    Digit* w = s.data() + i;
    const Digit x = w[3];
    std::string before = recording ? render(w, 4) : std::string{};
    if (const char* rule = detail::stage1_rule(w)) {
      if (w[3] != x) {
        // An increment only ever lands next to a 0 and on a digit below 3.
        if (x > 2 || w[2] != 0) {
          throw InvariantError("stage1: increment at offset " + std::to_string(i + 3) +
                               " violates its flanking invariant");
        }
      }
      if (trace) ++trace->firings;
      note(trace, i, rule, std::move(before), w, 4);
    }
    if (i + 1 < placements && s[i] > 1) {
      throw InvariantError("stage1: digit " + std::to_string(s[i]) + " left the window at offset " +
                           std::to_string(i));
    }
  }
  if (trace) trace->steps = placements;

  Digit* tail = s.data() + (n - 4);
  const std::string before = recording ? render(tail, 4) : std::string{};
  const auto cleanup = detail::stage1_cleanup(tail);
  if (!cleanup.ok) {
    throw InvariantError("stage1: cleanup cannot resolve final window " + render(tail, 4));
  }
  for (std::size_t k = 0; k < cleanup.count; ++k) {
    const auto& step = cleanup.steps[k];
    if (trace) ++trace->cleanups;
    if (recording) {
      trace->snapshots.push_back(Firing{n - 4 + step.offset, step.rule,
                                        before.substr(step.offset, step.width),
                                        render(tail + step.offset, step.width)});
    }
  }
  return WorkSeq(std::move(s));
}

WorkSeq stage2_right_to_left(WorkSeq input, PassTrace* trace) {
  std::vector<Digit> s = std::move(input).release();
  if (s.size() < 3) throw ContractError("stage2_rl: sequence shorter than the window");
  require_binary(s, "stage2_rl");
  start_trace(trace, PassId::stage2_rl, s.size());
  sweep_stage2(s, /*right_to_left=*/true, trace);
  if (contains_1011(s)) throw InvariantError("stage2_rl: result contains 1011");
  return WorkSeq(std::move(s));
}

WorkSeq stage2_left_to_right_digits(WorkSeq input, PassTrace* trace) {
  std::vector<Digit> s = std::move(input).release();
  if (s.size() < 3) throw ContractError("stage2_lr: sequence shorter than the window");
  require_binary(s, "stage2_lr");
  if (contains_1011(s)) throw ContractError("stage2_lr: input contains 1011");
  start_trace(trace, PassId::stage2_lr, s.size());
  sweep_stage2(s, /*right_to_left=*/false, trace);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == 1 && s[i - 1] == 1) throw InvariantError("stage2_lr: adjacent ones survived");
  }
  return WorkSeq(std::move(s));
}

ZeckSeq stage2_left_to_right(WorkSeq s, PassTrace* trace) {
  return ZeckSeq::from_digits(stage2_left_to_right_digits(std::move(s), trace).release());
}

ZeckSeq resolve(WorkSeq sum, std::array<PassTrace, 3>* traces) {
  if (sum.size() < 4) {
    std::vector<Digit> padded(4 - sum.size(), 0);
    const auto digits = sum.digits();
    padded.insert(padded.end(), digits.begin(), digits.end());
    sum = WorkSeq(std::move(padded));
  }
  PassTrace* t = traces ? traces->data() : nullptr;
  WorkSeq s = stage1_eliminate(std::move(sum), t);
  s = stage2_right_to_left(std::move(s), t ? t + 1 : nullptr);
  return stage2_left_to_right(std::move(s), t ? t + 2 : nullptr);
}

ZeckSeq add(const ZeckSeq& a, const ZeckSeq& b) { return resolve(digitwise_sum(a, b)); }

AddResult add_traced(const ZeckSeq& a, const ZeckSeq& b, bool snapshots) {
  AddResult result;
  for (PassTrace& t : result.passes) t.record = snapshots;
  result.sum = resolve(digitwise_sum(a, b), &result.passes);
  return result;
}

}  // namespace zeck
