#include "zeck/signed.hpp"

#include <algorithm>

#include "rules.hpp"
#include "zeck/errors.hpp"

namespace zeck {
namespace {

std::string render(const SignedDigit* first, std::size_t count) {
  std::string out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(digit_char(first[i]));
  return out;
}

// Shared tail of both signed routes.
SignedAddResult finish(Sign sign, WorkSeq work, std::vector<PassTrace> passes, bool snapshots,
                       bool traced) {
  SignedAddResult result;
  if (traced) {
    std::array<PassTrace, 3> unsigned_passes;
    for (PassTrace& t : unsigned_passes) t.record = snapshots;
    ZeckSeq magnitude = resolve(std::move(work), &unsigned_passes);
    result.sum = SignedZeck(sign, std::move(magnitude));
    for (PassTrace& t : unsigned_passes) passes.push_back(std::move(t));
    result.passes = std::move(passes);
  } else {
    result.sum = SignedZeck(sign, resolve(std::move(work)));
  }
  return result;
}

SignedAddResult add_signed_impl(const SignedZeck& a, const SignedZeck& b, bool snapshots,
                                bool traced) {
  if (a.sign() == b.sign()) {
    return finish(a.sign(), digitwise_sum(a.magnitude(), b.magnitude()), {}, snapshots, traced);
  }
  const SignedZeck& pos = a.sign() == Sign::nonneg ? a : b;
  const SignedZeck& neg = a.sign() == Sign::nonneg ? b : a;
  auto [sign, oriented] = detect_and_orient(digitwise_diff(pos.magnitude(), neg.magnitude()));
  std::vector<PassTrace> passes;
  PassTrace* prelim_trace = nullptr;
  if (traced) {
    passes.emplace_back().record = snapshots;
    prelim_trace = &passes.back();
  }
  WorkSeq work = preliminary_pass(std::move(oriented), prelim_trace);
  return finish(sign, std::move(work), std::move(passes), snapshots, traced);
}

}  // namespace

SignedZeck::SignedZeck(Sign sign, ZeckSeq magnitude)
    : sign_(magnitude.is_zero() ? Sign::nonneg : sign), magnitude_(std::move(magnitude)) {}

SignedZeck SignedZeck::parse(std::string_view text) {
  Sign sign = Sign::nonneg;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    sign = text.front() == '-' ? Sign::nonpos : Sign::nonneg;
    text.remove_prefix(1);
  }
  return SignedZeck(sign, ZeckSeq::parse(text));
}

Integer SignedZeck::value() const {
  Integer v = zeck::value(magnitude_);
  return sign_ == Sign::nonpos ? Integer(-v) : v;
}

std::string SignedZeck::str() const {
  return sign_ == Sign::nonpos ? "-" + magnitude_.str() : magnitude_.str();
}

TernSeq digitwise_diff(const ZeckSeq& a, const ZeckSeq& b) {
  const std::size_t len = std::max(a.size(), b.size()) + kSumPadding;
  std::vector<SignedDigit> out(len, 0);
  const auto da = a.digits();
  const auto db = b.digits();
  for (std::size_t i = 0; i < da.size(); ++i) out[len - da.size() + i] += da[i];
  for (std::size_t i = 0; i < db.size(); ++i) out[len - db.size() + i] -= db[i];
  return TernSeq(std::move(out));
}

std::pair<Sign, TernSeq> detect_and_orient(TernSeq t) {
  const auto digits = t.digits();
  const auto first = std::find_if(digits.begin(), digits.end(), [](SignedDigit d) { return d != 0; });
  if (first == digits.end() || *first > 0) return {Sign::nonneg, std::move(t)};
  std::vector<SignedDigit> flipped = std::move(t).release();
  for (SignedDigit& d : flipped) d = static_cast<SignedDigit>(-d);
  return {Sign::nonpos, TernSeq(std::move(flipped))};
}

WorkSeq preliminary_pass(TernSeq input, PassTrace* trace) {
  std::vector<SignedDigit> s = std::move(input).release();
  const std::size_t n = s.size();
  if (n < 3 || s[0] != 0 || s[1] != 0 || s[2] != 0) {
    throw ContractError("signed_prelim: three leading zeros required");
  }
  const auto first = std::find_if(s.begin(), s.end(), [](SignedDigit d) { return d != 0; });
  if (first != s.end() && *first < 0) {
    throw ContractError("signed_prelim: leading nonzero digit must be +1");
  }

  const bool recording = trace && trace->record;
  if (trace) {
    trace->pass = PassId::signed_prelim;
    trace->length = n;
    trace->firings = trace->cleanups = 0;
    trace->snapshots.clear();
  }
  const std::size_t placements = n - 2;
  for (std::size_t i = 0; i < placements; ++i) {
    SignedDigit* w = s.data() + i;
    std::string before = recording ? render(w, 3) : std::string{};
    if (const char* rule = detail::prelim_rule(w)) {
      if (trace) ++trace->firings;
      if (recording) trace->snapshots.push_back(Firing{i, rule, std::move(before), render(w, 3)});
    }
    if (s[i] < 0) {
      throw InvariantError("signed_prelim: uncovered window " + render(w, 3) + " at offset " +
                           std::to_string(i));
    }
  }
  if (trace) trace->steps = placements;

  SignedDigit* tail = s.data() + (n - 2);
  const std::string before = recording ? render(tail, 2) : std::string{};
  const auto cleanup = detail::prelim_cleanup(tail);
  if (!cleanup.ok) {
    throw InvariantError("signed_prelim: cannot resolve final digits " + render(s.data() + n - 3, 3));
  }
  if (cleanup.count > 0) {
    if (trace) ++trace->cleanups;
    if (recording) trace->snapshots.push_back(Firing{n - 2, cleanup.steps[0].rule, before, render(tail, 2)});
  }

  std::vector<Digit> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] < 0 || s[i] > 2) {
      throw InvariantError("signed_prelim: digit " + std::to_string(s[i]) + " in output");
    }
    out[i] = static_cast<Digit>(s[i]);
    if (out[i] == 2 && (i == 0 || s[i - 1] != 0 || (i + 1 < n && s[i + 1] != 0))) {
      throw InvariantError("signed_prelim: output 2 at offset " + std::to_string(i) +
                           " is not flanked by 0s");
    }
  }
  // Stage 1 needs a leading 0.
  if (out.front() != 0) out.insert(out.begin(), 0);
  return WorkSeq(std::move(out));
}

SignedZeck add_signed(const SignedZeck& a, const SignedZeck& b) {
  return add_signed_impl(a, b, false, false).sum;
}

SignedAddResult add_signed_traced(const SignedZeck& a, const SignedZeck& b, bool snapshots) {
  return add_signed_impl(a, b, snapshots, true);
}

SignedZeck subtract(const SignedZeck& a, const SignedZeck& b) { return add_signed(a, b.negated()); }

SignedZeck signed_greedy(const Integer& v) {
  if (v < 0) return SignedZeck(Sign::nonpos, greedy_zeckendorf(Integer(-v)));
  return SignedZeck(Sign::nonneg, greedy_zeckendorf(v));
}

}  // namespace zeck
