#include "zeck/random.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "zeck/adder.hpp"
#include "zeck/errors.hpp"
#include "zeck/signed.hpp"

namespace zeck {
namespace {

// Strings of r digits without adjacent 1s number F_{r+2}. A free position
// with r positions left (itself included) takes a 1 with probability
// F_r / F_{r+2}, which makes the whole string uniform. The ratio settles at
// 1/phi^2 well within double precision after a few dozen positions.
double one_probability(std::size_t r) {
  if (r > 60) return 0.3819660112501051;
  double a = 1, b = 1;  // F_1, F_2
  for (std::size_t k = 2; k <= r; ++k) std::tie(a, b) = std::pair(b, a + b);
  // now a = F_r, b = F_{r+1}
  return a / (a + b);
}

std::vector<Digit> uniform_free_digits(Rng& rng, std::size_t length) {
  std::vector<Digit> out(length, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0 && out[i - 1] == 1) continue;
    if (u(rng) < one_probability(length - i)) out[i] = 1;
  }
  return out;
}

std::vector<Symbol> padded(std::span<const Digit> digits, std::size_t length) {
  std::vector<Symbol> out(length - digits.size(), 0);
  out.insert(out.end(), digits.begin(), digits.end());
  return out;
}

}  // namespace

ZeckSeq random_zeck(Rng& rng, std::size_t length) {
  if (length == 0) return {};
  std::vector<Digit> digits{1};
  if (length > 1) {
    digits.push_back(0);
    const auto rest = uniform_free_digits(rng, length - 2);
    digits.insert(digits.end(), rest.begin(), rest.end());
  }
  return ZeckSeq::from_digits(std::move(digits));
}

ZeckSeq random_zeck_upto(Rng& rng, std::size_t max_digits) {
  return ZeckSeq::from_digits(uniform_free_digits(rng, max_digits));
}

std::vector<Symbol> random_pass_input(PassId pass, Rng& rng, std::size_t length) {
  if (length < window_width(pass)) {
    throw ContractError(std::string(to_string(pass)) + ": length below the window width");
  }
  std::uniform_int_distribution<std::size_t> pick(0, length - kSumPadding);
  switch (pass) {
    case PassId::stage1: {
      const ZeckSeq a = random_zeck(rng, length - kSumPadding);
      const ZeckSeq b = random_zeck(rng, pick(rng));
      const WorkSeq sum = digitwise_sum(a, b);
      return padded(sum.digits(), length);
    }
    case PassId::stage2_rl:
    case PassId::stage2_lr: {
      std::vector<Digit> bits(length, 0);
      std::bernoulli_distribution coin(0.5);
      for (std::size_t i = 1; i < length; ++i) bits[i] = coin(rng) ? 1 : 0;
      if (pass == PassId::stage2_lr) bits = stage2_right_to_left(WorkSeq(std::move(bits))).release();
      return {bits.begin(), bits.end()};
    }
    case PassId::signed_prelim: {
      ZeckSeq a = random_zeck(rng, length - kSumPadding);
      ZeckSeq b = random_zeck(rng, pick(rng));
      if (std::bernoulli_distribution(0.5)(rng)) std::swap(a, b);
      const auto diff = detect_and_orient(digitwise_diff(a, b)).second;
      std::vector<Symbol> out(length - diff.size(), 0);
      out.insert(out.end(), diff.digits().begin(), diff.digits().end());
      return out;
    }
  }
  throw ContractError("unknown pass");
}

}  // namespace zeck
