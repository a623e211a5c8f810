// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zeck/zeck.hpp"

namespace {

using namespace zeck;

constexpr PassId kPasses[] = {PassId::stage1, PassId::stage2_rl, PassId::stage2_lr,
                              PassId::signed_prelim};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::size_t log_uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  std::uniform_real_distribution<double> u(std::log(static_cast<double>(lo)),
                                           std::log(static_cast<double>(hi) + 1.0));
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::exp(u(rng))), lo, hi);
}

bool has_1011(std::span<const Digit> d) {
  for (std::size_t i = 0; i + 4 <= d.size(); ++i) {
    if (d[i] == 1 && d[i + 1] == 0 && d[i + 2] == 1 && d[i + 3] == 1) return true;
  }
  return false;
}

std::vector<Digit> as_digits(std::span<const Symbol> s) { return {s.begin(), s.end()}; }

Integer value_of_symbols(std::span<const Symbol> s) {
  return value(std::span<const SignedDigit>(s.data(), s.size()));
}

/// Greedy table for [0, max] checked against brute-force enumeration.
std::vector<ZeckSeq> checked_greedy_table(int max, Outcome& o) {
  const auto enumerated = oracle::enumerate_canonical(static_cast<std::size_t>(max) + 1);
  std::vector<ZeckSeq> table;
  table.reserve(max + 1);
  for (int v = 0; v <= max; ++v) {
    table.push_back(greedy_zeckendorf(v));
    o.require(table.back().str() == enumerated[v], "greedy(" + std::to_string(v) + ")");
  }
  return table;
}

// Shared by criteria 1 and 3.
std::size_t g_rl_inputs_from_c1 = 0;
std::size_t g_rl_violations_from_c1 = 0;

void criterion1(Outcome& o) {
  constexpr int kMax = 1500;
  const auto z = checked_greedy_table(2 * kMax, o);
  std::size_t cases = 0, mismatches = 0;
  for (int x = 0; x <= kMax; ++x) {
    for (int y = 0; y <= kMax; ++y) {
      WorkSeq sum = digitwise_sum(z[x], z[y]);
      if (sum.size() < 4) sum = WorkSeq(std::vector<Digit>(4, 0));
      WorkSeq s = stage1_eliminate(std::move(sum));
      s = stage2_right_to_left(std::move(s));
      ++g_rl_inputs_from_c1;
      if (has_1011(s.digits())) ++g_rl_violations_from_c1;
      const ZeckSeq r = stage2_left_to_right(std::move(s));
      ++cases;
      if (r != z[x + y]) {
        ++mismatches;
        o.require(false, std::to_string(x) + "+" + std::to_string(y));
      }
      if (add(z[x], z[y]) != r) o.require(false, "add() differs from pass chain");
    }
  }
  o.detail << cases << " cases, " << mismatches << " mismatches";
}

void criterion2(Outcome& o) {
  Rng rng(2002);
  constexpr int kInputs = 10000;
  for (PassId p : kPasses) {
    std::size_t longest = 0, checked = 0;
    for (int i = 0; i < kInputs; ++i) {
      const std::size_t n = log_uniform(rng, window_width(p), 10000);
      longest = std::max(longest, n);
      const auto in = random_pass_input(p, rng, n);
      const auto out = direct_pass(p, in);
      ++checked;
      if (value_of_symbols(in) != value_of_symbols(out)) {
        o.require(false, std::string(to_string(p)) + " value changed at n=" + std::to_string(n));
      }
      const bool binary_out = std::all_of(out.begin(), out.end(), [](Symbol s) { return s == 0 || s == 1; });
      if (p == PassId::stage1) o.require(binary_out, "stage1 output alphabet");
    }
    o.detail << to_string(p) << ": " << checked << " inputs (max n=" << longest << "); ";
  }
  // One input at the top of the length range per pass, regardless of the draw.
  for (PassId p : kPasses) {
    const auto in = random_pass_input(p, rng, 10000);
    o.require(value_of_symbols(in) == value_of_symbols(direct_pass(p, in)),
              std::string(to_string(p)) + " value at n=10000");
  }
}

void criterion3(Outcome& o) {
  Rng rng(3003);
  constexpr int kInputs = 100000;
  std::size_t violations = 0;
  for (int i = 0; i < kInputs; ++i) {
    const std::size_t n = log_uniform(rng, 3, 2000);
    // Alternate between arbitrary binary strings and stage-1 outputs.
    std::vector<Digit> bits;
    if (i % 2 == 0) {
      bits = as_digits(random_pass_input(PassId::stage2_rl, rng, n));
    } else {
      bits = as_digits(direct_pass(PassId::stage1, random_pass_input(PassId::stage1, rng, n + 1)));
    }
    const WorkSeq out = stage2_right_to_left(WorkSeq(std::move(bits)));
    if (has_1011(out.digits())) ++violations;
  }
  o.require(violations == 0, "random inputs contain 1011 after the right-to-left pass");
  o.require(g_rl_inputs_from_c1 > 0, "criterion 1 inputs not run");
  o.require(g_rl_violations_from_c1 == 0, "criterion 1 inputs contain 1011");
  o.detail << kInputs << " random inputs: " << violations << " violations; " << g_rl_inputs_from_c1
           << " criterion-1 inputs: " << g_rl_violations_from_c1 << " violations";
}

void criterion4(Outcome& o) {
  Rng rng(4004);
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    std::size_t worst_total = 0;
    for (int trial = 0; trial < 5; ++trial) {
      const auto in = random_pass_input(PassId::stage1, rng, n);
      std::array<PassTrace, 3> t;
      WorkSeq s = stage1_eliminate(to_work(in), &t[0]);
      s = stage2_right_to_left(std::move(s), &t[1]);
      stage2_left_to_right(std::move(s), &t[2]);
      std::size_t total = 0;
      for (const PassTrace& p : t) {
        const std::size_t w = window_width(p.pass);
        o.require(p.steps == n - w + 1, std::string(to_string(p.pass)) + " placements at n=" +
                                            std::to_string(n));
        total += p.steps;
      }
      o.require(total <= 3 * n, "total placements above 3n");
      worst_total = std::max(worst_total, total);

      // The transducer runs report the same counts.
      auto sym = in;
      for (PassId p : {PassId::stage1, PassId::stage2_rl, PassId::stage2_lr}) {
        const RunResult r = run_scan(transducer_for(p), sym);
        o.require(r.cost.placements == n - window_width(p) + 1, "transducer placements");
        o.require(r.cost.transitions == n, "transducer transitions");
        sym = r.digits;
      }
    }
    o.detail << "n=" << n << ": placements " << n - 3 << "+" << n - 2 << "+" << n - 2 << "="
             << worst_total << " <= " << 3 * n << "; ";
  }
}

void criterion5(Outcome& o) {
  constexpr int kMax = 1000;
  const auto z = checked_greedy_table(2 * kMax, o);
  std::vector<std::string> expected(4 * kMax + 1);
  for (int v = -2 * kMax; v <= 2 * kMax; ++v) expected[v + 2 * kMax] = oracle::signed_zeckendorf(v);
  auto want = [&](int v) -> const std::string& { return expected[v + 2 * kMax]; };

  std::size_t cases = 0, mismatches = 0, uncovered = 0, boundary = 0, prelim_runs = 0;
  for (int x = 0; x <= kMax; ++x) {
    for (int y = 0; y <= kMax; ++y) {
      // Preliminary pass on the oriented difference, with counts.
      PassTrace t;
      try {
        preliminary_pass(detect_and_orient(digitwise_diff(z[x], z[y])).second, &t);
        ++prelim_runs;
        boundary += t.cleanups;
      } catch (const InvariantError&) {
        ++uncovered;
      }
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          const SignedZeck a(sx > 0 ? Sign::nonneg : Sign::nonpos, z[x]);
          const SignedZeck b(sy > 0 ? Sign::nonneg : Sign::nonpos, z[y]);
          const SignedZeck s = add_signed(a, b);
          const SignedZeck d = subtract(a, b);
          cases += 2;
          const int vs = sx * x + sy * y, vd = sx * x - sy * y;
          const bool ok = s.str() == want(vs) && d.str() == want(vd) &&
                          (!s.is_zero() || s.sign() == Sign::nonneg) &&
                          (!d.is_zero() || d.sign() == Sign::nonneg);
          if (!ok) {
            ++mismatches;
            o.require(false, std::to_string(sx * x) + " (+/-) " + std::to_string(sy * y));
          }
        }
      }
    }
  }
  o.require(uncovered == 0, "uncovered preliminary-pass window");
  o.detail << cases << " operations, " << mismatches << " mismatches; " << uncovered
           << " uncovered windows; right-end cleanup used on " << boundary << " of " << prelim_runs
           << " preliminary passes";
}

void criterion6(Outcome& o) {
  constexpr int kMax = 100000;
  const auto enumerated = oracle::enumerate_canonical(kMax + 1);
  std::size_t height_checks = 0;
  for (int v = 0; v <= kMax; ++v) {
    const BitSeq b = BitSeq::from_natural(v);
    TreeShape up, down;
    const ZeckSeq z = binary_to_zeck(b, &up);
    const BitSeq back = zeck_to_binary(z, &down);
    if (z.str() != enumerated[v] || back != b) o.require(false, "value " + std::to_string(v));
    if (up.height != ceil_log2(b.size()) || down.height != ceil_log2(z.size())) {
      o.require(false, "tree height at " + std::to_string(v));
    }
    height_checks += 2;
  }
  Rng rng(6006);
  for (int i = 0; i < 100; ++i) {
    std::vector<Digit> bits(1024);
    bits[0] = 1;
    for (std::size_t j = 1; j < bits.size(); ++j) bits[j] = static_cast<Digit>(rng() & 1);
    const BitSeq b = BitSeq::from_bits(bits);
    TreeShape up, down;
    const ZeckSeq z = binary_to_zeck(b, &up);
    o.require(z.str() == oracle::zeckendorf(b.to_natural()), "1024-bit greedy");
    o.require(zeck_to_binary(z, &down) == b, "1024-bit round trip");
    o.require(up.height == 10 && down.height == ceil_log2(z.size()), "1024-bit tree height");
    height_checks += 2;
  }
  o.detail << kMax + 1 << " values + 100 random 1024-bit values; " << height_checks
           << " tree heights = ceil(log2 n)";
}

void criterion7(Outcome& o) {
  constexpr int kMax = 300;
  const auto z = checked_greedy_table(kMax, o);
  std::size_t cases = 0;
  for (int x = 0; x <= kMax; ++x) {
    for (int y = 0; y <= kMax; ++y) {
      const std::string want = oracle::zeckendorf(x * y);
      const ZeckSeq f = mul_fenwick(z[x], z[y]);
      const ZeckSeq b = mul_binary(z[x], z[y]);
      if (f.str() != want || b.str() != want) {
        o.require(false, std::to_string(x) + "*" + std::to_string(y));
      }
      ++cases;
    }
  }
  Rng rng(7007);
  for (int i = 0; i < 100; ++i) {
    const ZeckSeq a = random_zeck(rng, 128);
    const ZeckSeq b = random_zeck(rng, 128);
    const std::string want =
        oracle::zeckendorf(oracle::value_of(a.str()) * oracle::value_of(b.str()));
    FenwickStats stats;
    o.require(mul_fenwick(a, b, &stats).str() == want, "random fenwick product");
    o.require(mul_binary(a, b).str() == want, "random binary product");
    o.require(stats.total() <= 3 * b.size(), "fenwick addition count");
    ++cases;
  }
  o.detail << cases << " products, both methods";
}

void criterion8(Outcome& o) {
  const auto z = checked_greedy_table(2000, o);
  std::size_t divisions = 0;
  for (int x = 0; x <= 2000; ++x) {
    for (int d = 1; d <= 200; ++d) {
      const DivRem r = divrem(z[x], z[d]);
      const oracle::Big q = oracle::value_of(r.quotient.str());
      const oracle::Big rem = oracle::value_of(r.remainder.str());
      if (q * d + rem != x || rem < 0 || rem >= d) {
        o.require(false, std::to_string(x) + "/" + std::to_string(d));
      }
      ++divisions;
    }
  }
  std::size_t roots = 0;
  for (int x = 0; x <= 100000; ++x) {
    const SqrtRem r = sqrt_rem(greedy_zeckendorf(x));
    const oracle::Big s = oracle::value_of(r.root.str());
    const oracle::Big rem = oracle::value_of(r.remainder.str());
    if (s * s > x || (s + 1) * (s + 1) <= x || rem != x - s * s) {
      o.require(false, "sqrt " + std::to_string(x));
    }
    ++roots;
  }
  o.detail << divisions << " divisions, " << roots << " square roots";
}

void criterion9(Outcome& o) {
  Rng rng(9009);
  constexpr int kInputs = 10000;
  for (PassId p : kPasses) {
    const Transducer& t = transducer_for(p);
    std::size_t prefix_runs = 0;
    for (int i = 0; i < kInputs; ++i) {
      const std::size_t n = log_uniform(rng, window_width(p), 2048);
      const auto in = random_pass_input(p, rng, n);
      const RunResult scan = run_scan(t, in);
      if (scan.digits != direct_pass(p, in)) {
        o.require(false, std::string(to_string(p)) + " scan differs from direct pass");
      }
      o.require(scan.cost.transitions == n, "scan transitions");
      for (std::size_t chunk : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{8},
                                std::size_t{64}, n}) {
        const RunResult pre = run_parallel_prefix(t, in, chunk);
        if (pre.digits != scan.digits) {
          o.require(false, std::string(to_string(p)) + " prefix differs, chunk " +
                               std::to_string(chunk));
        }
        o.require(pre.cost.tree_height == ceil_log2(n), "tree height");
        o.require(pre.cost.compositions <= 2 * n, "compositions above 2n");
        ++prefix_runs;
      }
    }
    o.detail << to_string(p) << " (" << t.state_count() << " states): " << kInputs << " scans, "
             << prefix_runs << " prefix runs; ";
  }
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion10(Outcome& o) {
  Rng rng(10010);
  constexpr int kSequences = 10000;
  std::size_t codewords = 0;
  for (int i = 0; i < kSequences; ++i) {
    std::vector<Natural> values;
    for (std::size_t k = rng() % 20; k-- > 0;) {
      values.push_back(value(random_zeck(rng, 1 + log_uniform(rng, 1, 200))));
    }
    for (const Natural& v : values) {
      const std::string w = fibonacci_codeword(v);
      if (w.find("11") != w.size() - 2) o.require(false, "internal 11 in codeword");
      ++codewords;
    }
    const auto bytes = serialize(encode_stream(values));
    if (decode_stream(parse_code_stream(bytes)) != values) o.require(false, "round trip");
  }

  std::vector<Natural> golden;
  {
    std::ifstream in(std::string(ZECK_GOLDEN_DIR) + "/codec_values.txt");
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) golden.emplace_back(line);
    }
  }
  const auto expected = read_file(std::string(ZECK_GOLDEN_DIR) + "/codec_values.zfib");
  o.require(!golden.empty() && !expected.empty(), "golden files present");
  const auto first = serialize(encode_stream(golden));
  const auto second = serialize(encode_stream(golden));
  o.require(first == expected && second == expected, "golden bytes");
  o.detail << kSequences << " sequences, " << codewords << " codewords; golden file "
           << expected.size() << " bytes matched twice";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"exhaustive unsigned addition [0,1500]^2", criterion1},
      {"per-pass value conservation", criterion2},
      {"no 1011 after right-to-left pass", criterion3},
      {"three-pass linearity", criterion4},
      {"exhaustive signed arithmetic [0,1000]^2 x signs", criterion5},
      {"conversion round trips and tree height", criterion6},
      {"multiplication cross-check", criterion7},
      {"division and square root contracts", criterion8},
      {"transducer equivalence", criterion9},
      {"codec round trip and golden bytes", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s: %s (%s) [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
