#include "zeck/automaton.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "rules.hpp"
#include "zeck/adder.hpp"
#include "zeck/errors.hpp"
#include "zeck/signed.hpp"

namespace zeck {
namespace {

struct PassRules {
  Direction direction;
  std::size_t width;
  std::vector<Symbol> input;
  std::vector<Symbol> output;
  bool (*rule)(Symbol* window);
  // Rewrites the width-1 pending digits at the end of the input; returns
  // (ok, cleanups fired).
  std::pair<bool, std::size_t> (*finish)(std::vector<Symbol>& pending);
};

std::pair<bool, std::size_t> no_cleanup(std::vector<Symbol>&) { return {true, 0}; }

PassRules rules_for(PassId pass) {
  switch (pass) {
    case PassId::stage1:
      return {Direction::left_to_right, 4, {0, 1, 2}, {0, 1},
              [](Symbol* w) { return detail::stage1_rule(w) != nullptr; },
              [](std::vector<Symbol>& p) -> std::pair<bool, std::size_t> {
                // The digit left of the pending three is already emitted. It
                // only matters to the 0120 pattern, which cannot follow a
                // placement (a final window 012x fires 012x), so any nonzero
                // stand-in gives the same result.
                Symbol w[4] = {1, p[0], p[1], p[2]};
                const auto r = detail::stage1_cleanup(w);
                std::copy(w + 1, w + 4, p.begin());
                return {r.ok, r.count};
              }};
    case PassId::stage2_rl:
      return {Direction::right_to_left, 3, {0, 1}, {0, 1},
              [](Symbol* w) { return detail::stage2_rule_mirrored(w); }, no_cleanup};
    case PassId::stage2_lr:
      return {Direction::left_to_right, 3, {0, 1}, {0, 1},
              [](Symbol* w) { return detail::stage2_rule(w); }, no_cleanup};
    case PassId::signed_prelim:
      return {Direction::left_to_right, 3, {-1, 0, 1}, {0, 1, 2},
              [](Symbol* w) { return detail::prelim_rule(w) != nullptr; },
              [](std::vector<Symbol>& p) -> std::pair<bool, std::size_t> {
                const auto r = detail::prelim_cleanup(p.data());
                return {r.ok, r.count};
              }};
  }
  throw ContractError("unknown pass");
}

bool contains(const std::vector<Symbol>& alphabet, Symbol s) {
  return std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end();
}

std::vector<Symbol> oriented_copy(const Transducer& t, std::span<const Symbol> digits) {
  std::vector<Symbol> out(digits.begin(), digits.end());
  if (t.direction() == Direction::right_to_left) std::reverse(out.begin(), out.end());
  return out;
}

void check_length(const Transducer& t, std::size_t n) {
  if (n < t.width()) {
    throw ContractError(std::string(to_string(t.pass())) + ": sequence shorter than the window");
  }
}

[[noreturn]] void fault(const Transducer& t, const char* what) {
  throw InvariantError(std::string(to_string(t.pass())) + ": " + what);
}

// Splits [0, count) into tasks of `chunk` items; runs them on up to
// `threads` workers. `body(task, begin, end)` must not throw.
template <class Body>
void for_each_chunk(std::size_t count, std::size_t chunk, unsigned threads, Body&& body) {
  const std::size_t tasks = (count + chunk - 1) / chunk;
  auto run_task = [&](std::size_t task) {
    body(task, task * chunk, std::min(count, (task + 1) * chunk));
  };
  if (threads <= 1 || tasks <= 1) {
    for (std::size_t task = 0; task < tasks; ++task) run_task(task);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) run_task(task);
  };
  std::vector<std::jthread> pool;
  const std::size_t extra = std::min<std::size_t>(threads, tasks) - 1;
  pool.reserve(extra);
  for (std::size_t i = 0; i < extra; ++i) pool.emplace_back(worker);
  worker();
}

}  // namespace

Transducer compile_pass(PassId pass) {
  const PassRules rules = rules_for(pass);
  Transducer t;
  t.pass_ = pass;
  t.direction_ = rules.direction;
  t.width_ = rules.width;
  t.input_alphabet_ = rules.input;
  t.output_alphabet_ = rules.output;
  t.symbol_index_.fill(-1);
  for (std::size_t j = 0; j < rules.input.size(); ++j) {
    t.symbol_index_[static_cast<std::uint8_t>(rules.input[j])] = static_cast<int>(j);
  }

  constexpr int kToFault = -1;
  const std::size_t k = rules.input.size();
  std::map<std::vector<Symbol>, int> index;
  std::vector<int> next_raw;
  t.pending_.push_back({});
  index.emplace(std::vector<Symbol>{}, 0);

  for (std::size_t s = 0; s < t.pending_.size(); ++s) {
    const std::vector<Symbol> current = t.pending_[s];
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Symbol> buf = current;
      buf.push_back(rules.input[j]);
      Transducer::Transition tr;
      if (buf.size() >= rules.width) {
        tr.placement = true;
        tr.fired = rules.rule(buf.data() + buf.size() - rules.width);
      }
      if (buf.size() > rules.width - 1) {
        tr.emit = buf.front();
        buf.erase(buf.begin());
      }
      int next = kToFault;
      if (tr.emit == Transducer::kNoEmit || contains(rules.output, tr.emit)) {
        auto [it, inserted] = index.emplace(buf, static_cast<int>(t.pending_.size()));
        if (inserted) {
          t.pending_.push_back(buf);
          if (t.pending_.size() > kMaxStates) {
            throw InvariantError(std::string(to_string(pass)) + ": state space exceeds " +
                                 std::to_string(kMaxStates));
          }
        }
        next = it->second;
      } else {
        tr.emit = Transducer::kNoEmit;
      }
      next_raw.push_back(next);
      t.table_.push_back(tr);
    }
  }

  if (std::find(next_raw.begin(), next_raw.end(), kToFault) != next_raw.end()) {
    if (t.pending_.size() >= kMaxStates) {
      throw InvariantError(std::string(to_string(pass)) + ": no room for the fault state");
    }
    t.fault_ = static_cast<int>(t.pending_.size());
    t.pending_.push_back({});
    for (std::size_t j = 0; j < k; ++j) {
      next_raw.push_back(t.fault_);
      t.table_.push_back(Transducer::Transition{});
    }
  }
  for (std::size_t i = 0; i < t.table_.size(); ++i) {
    t.table_[i].next = static_cast<StateId>(next_raw[i] == kToFault ? t.fault_ : next_raw[i]);
  }

  t.final_.resize(t.pending_.size());
  for (std::size_t s = 0; s < t.pending_.size(); ++s) {
    Transducer::Final& f = t.final_[s];
    if (static_cast<int>(s) == t.fault_ || t.pending_[s].size() + 1 < rules.width) continue;
    f.symbols = t.pending_[s];
    const auto [ok, cleanups] = rules.finish(f.symbols);
    f.cleanups = cleanups;
    f.ok = ok && std::all_of(f.symbols.begin(), f.symbols.end(),
                             [&](Symbol x) { return contains(rules.output, x); });
  }

  t.columns_.assign(k, std::vector<StateId>(t.pending_.size()));
  for (std::size_t s = 0; s < t.pending_.size(); ++s) {
    for (std::size_t j = 0; j < k; ++j) t.columns_[j][s] = t.table_[s * k + j].next;
  }
  return t;
}

const Transducer& transducer_for(PassId pass) {
  static const std::array<Transducer, 4> compiled{
      compile_pass(PassId::stage1), compile_pass(PassId::stage2_rl),
      compile_pass(PassId::stage2_lr), compile_pass(PassId::signed_prelim)};
  return compiled[static_cast<std::size_t>(pass)];
}

RunResult run_scan(const Transducer& t, std::span<const Symbol> digits) {
  check_length(t, digits.size());
  const std::vector<Symbol> input = oriented_copy(t, digits);
  RunResult run;
  run.cost.pass = t.pass();
  run.cost.length = input.size();
  run.digits.reserve(input.size());

  StateId state = t.initial();
  for (Symbol sym : input) {
    const int idx = t.symbol_index(sym);
    if (idx < 0) throw ContractError("symbol " + std::to_string(sym) + " outside the input alphabet");
    const auto& tr = t.step(state, static_cast<std::size_t>(idx));
    if (t.is_fault(tr.next)) fault(t, "digit outside the output alphabet left the window");
    ++run.cost.transitions;
    run.cost.placements += tr.placement;
    run.cost.firings += tr.fired;
    if (tr.emit != Transducer::kNoEmit) run.digits.push_back(tr.emit);
    state = tr.next;
  }
  const auto& fin = t.finalization(state);
  if (!fin.ok) fault(t, "end-of-sequence cleanup cannot resolve the pending digits");
  run.digits.insert(run.digits.end(), fin.symbols.begin(), fin.symbols.end());
  run.cost.cleanups = fin.cleanups;
  if (t.direction() == Direction::right_to_left) std::reverse(run.digits.begin(), run.digits.end());
  return run;
}

RunResult run_parallel_prefix(const Transducer& t, std::span<const Symbol> digits,
                              std::size_t chunk, unsigned threads) {
  check_length(t, digits.size());
  if (chunk == 0) throw ContractError("chunk must be at least 1");
  const std::vector<Symbol> input = oriented_copy(t, digits);
  const std::size_t n = input.size();
  const std::size_t states = t.state_count();

  std::vector<std::uint8_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int j = t.symbol_index(input[i]);
    if (j < 0) {
      throw ContractError("symbol " + std::to_string(input[i]) + " outside the input alphabet");
    }
    idx[i] = static_cast<std::uint8_t>(j);
  }

  RunResult run;
  run.cost.pass = t.pass();
  run.cost.length = n;
  run.cost.chunk = chunk;

  // Up-sweep. Level 0 borrows the per-symbol columns; each higher level owns
  // its composed tables. A composed node maps the state before its span to
  // the state after it.
  std::vector<std::vector<const StateId*>> nodes(1);
  std::vector<std::vector<StateId>> storage;
  nodes[0].resize(n);
  for (std::size_t i = 0; i < n; ++i) nodes[0][i] = t.column(idx[i]).data();
  while (nodes.back().size() > 1) {
    const auto& below = nodes.back();
    const std::size_t pairs = below.size() / 2;
    std::vector<StateId>& tables = storage.emplace_back(pairs * states);
    for_each_chunk(pairs, chunk, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        const StateId* left = below[2 * j];
        const StateId* right = below[2 * j + 1];
        StateId* out = tables.data() + j * states;
        for (std::size_t s = 0; s < states; ++s) out[s] = right[left[s]];
      }
    });
    std::vector<const StateId*> level(pairs);
    for (std::size_t j = 0; j < pairs; ++j) level[j] = tables.data() + j * states;
    if (below.size() % 2 == 1) level.push_back(below.back());
    run.cost.compositions += pairs;
    nodes.push_back(std::move(level));
  }
  run.cost.tree_height = nodes.size() - 1;

  // Down-sweep: the state entering each node. A right child starts where its
  // left sibling leaves off.
  std::vector<StateId> entering{t.initial()};
  for (std::size_t level = nodes.size() - 1; level-- > 0;) {
    const auto& row = nodes[level];
    std::vector<StateId> below(row.size());
    for_each_chunk(row.size(), chunk, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        const StateId parent = entering[j / 2];
        below[j] = (j % 2 == 0) ? parent : row[j - 1][parent];
      }
    });
    entering = std::move(below);
  }
  const StateId final_state = nodes.back()[0][t.initial()];

  // Leaves: the transition taken at each position gives its emission.
  const std::size_t fill = t.width() - 1;
  run.digits.assign(n - fill, 0);
  const std::size_t tasks = (n + chunk - 1) / chunk;
  std::vector<std::array<std::size_t, 2>> counts(tasks, {0, 0});
  std::atomic<bool> faulted{false};
  for_each_chunk(n, chunk, threads, [&](std::size_t task, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& tr = t.step(entering[i], idx[i]);
      if (t.is_fault(tr.next)) {
        faulted = true;
        continue;
      }
      counts[task][0] += tr.placement;
      counts[task][1] += tr.fired;
      if (i >= fill) run.digits[i - fill] = tr.emit;
    }
  });
  if (faulted || t.is_fault(final_state)) {
    fault(t, "digit outside the output alphabet left the window");
  }
  for (const auto& c : counts) {
    run.cost.placements += c[0];
    run.cost.firings += c[1];
  }
  run.cost.transitions = n;

  const auto& fin = t.finalization(final_state);
  if (!fin.ok) fault(t, "end-of-sequence cleanup cannot resolve the pending digits");
  run.digits.insert(run.digits.end(), fin.symbols.begin(), fin.symbols.end());
  run.cost.cleanups = fin.cleanups;
  if (t.direction() == Direction::right_to_left) std::reverse(run.digits.begin(), run.digits.end());
  return run;
}

std::vector<Symbol> to_symbols(const WorkSeq& s) {
  const auto d = s.digits();
  return {d.begin(), d.end()};
}

std::vector<Symbol> to_symbols(const TernSeq& s) {
  const auto d = s.digits();
  return {d.begin(), d.end()};
}

WorkSeq to_work(std::span<const Symbol> symbols) {
  std::vector<Digit> digits;
  digits.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s < 0 || s > 3) throw ContractError("symbol outside {0,1,2,3}");
    digits.push_back(static_cast<Digit>(s));
  }
  return WorkSeq(std::move(digits));
}

std::vector<Symbol> direct_pass(PassId pass, std::span<const Symbol> digits) {
  switch (pass) {
    case PassId::stage1:
      return to_symbols(stage1_eliminate(to_work(digits)));
    case PassId::stage2_rl:
      return to_symbols(stage2_right_to_left(to_work(digits)));
    case PassId::stage2_lr:
      return to_symbols(stage2_left_to_right_digits(to_work(digits)));
    case PassId::signed_prelim:
      return to_symbols(
          preliminary_pass(TernSeq(std::vector<SignedDigit>(digits.begin(), digits.end()))));
  }
  throw ContractError("unknown pass");
}

}  // namespace zeck
