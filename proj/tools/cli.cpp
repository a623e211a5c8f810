#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "zeck/zeck.hpp"

namespace zeck::cli {
namespace {

// Raised for unreadable or unwritable files; reported like a contract error.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Operands {
  std::vector<std::string> values;
  bool dec = false;
  bool trace = false;
};

SignedZeck parse_signed(const std::string& text, bool dec) {
  if (!dec) return SignedZeck::parse(text);
  std::string_view body = text;
  Sign sign = Sign::nonneg;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    if (body.front() == '-') sign = Sign::nonpos;
    body.remove_prefix(1);
  }
  return SignedZeck(sign, to_zeck(parse_decimal(body)));
}

ZeckSeq parse_unsigned(const std::string& text, bool dec) {
  SignedZeck v = parse_signed(text, dec);
  if (v.sign() == Sign::nonpos) throw DomainError("negative operand: " + text);
  return v.magnitude();
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path);
}

std::vector<Natural> read_decimal_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<Natural> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    values.push_back(parse_decimal(line));
  }
  return values;
}

void print_traces(std::ostream& out, const std::vector<PassTrace>& passes) {
  for (const PassTrace& t : passes) write_trace(out, t);
}

template <std::size_t N>
std::vector<PassTrace> as_vector(std::array<PassTrace, N>& passes) {
  return {std::make_move_iterator(passes.begin()), std::make_move_iterator(passes.end())};
}

int cmd_add(const Operands& ops, bool negate_second, std::ostream& out, std::ostream& err) {
  const SignedZeck a = parse_signed(ops.values[0], ops.dec);
  SignedZeck b = parse_signed(ops.values[1], ops.dec);
  if (negate_second) b = b.negated();
  if (ops.trace) {
    SignedAddResult r = add_signed_traced(a, b, true);
    print_traces(err, r.passes);
    out << r.sum.str() << '\n';
  } else {
    out << add_signed(a, b).str() << '\n';
  }
  return kOk;
}

int cmd_trace(const Operands& ops, const std::string& pass_name, std::ostream& out) {
  if (pass_name.empty()) {
    if (ops.values.size() != 2) throw ContractError("trace: expected two operands");
    const SignedZeck a = parse_signed(ops.values[0], ops.dec);
    const SignedZeck b = parse_signed(ops.values[1], ops.dec);
    SignedAddResult r = add_signed_traced(a, b, true);
    print_traces(out, r.passes);
    out << r.sum.str() << '\n';
    return kOk;
  }
  const auto pass = parse_pass_id(pass_name);
  if (!pass) throw ContractError("unknown pass: " + pass_name);
  if (ops.values.size() != 1) throw ContractError("trace --pass: expected one digit sequence");
  PassTrace trace;
  trace.record = true;
  std::string result;
  switch (*pass) {
    case PassId::stage1:
      result = stage1_eliminate(WorkSeq::parse(ops.values[0]), &trace).str();
      break;
    case PassId::stage2_rl:
      result = stage2_right_to_left(WorkSeq::parse(ops.values[0]), &trace).str();
      break;
    case PassId::stage2_lr:
      result = stage2_left_to_right_digits(WorkSeq::parse(ops.values[0]), &trace).str();
      break;
    case PassId::signed_prelim:
      result = preliminary_pass(TernSeq::parse(ops.values[0]), &trace).str();
      break;
  }
  write_trace(out, trace);
  out << result << '\n';
  return kOk;
}

struct BenchOptions {
  std::string pass = "stage1";
  std::size_t digits = 10000;
  std::size_t trials = 5;
  bool prefix = false;
  std::size_t chunk = 64;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchOptions& opt, std::ostream& err) {
  const auto pass = parse_pass_id(opt.pass);
  if (!pass) throw ContractError("unknown pass: " + opt.pass);
  const Transducer& t = transducer_for(*pass);
  Rng rng(opt.seed);
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const std::vector<Symbol> input = random_pass_input(*pass, rng, opt.digits);
    const auto start = std::chrono::steady_clock::now();
    const RunResult run = opt.prefix ? run_parallel_prefix(t, input, opt.chunk, opt.threads)
                                     : run_scan(t, input);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const double ns = std::chrono::duration<double, std::nano>(elapsed).count();
    const CostReport& c = cost_report(run);
    err << "pass=" << to_string(c.pass) << " n=" << c.length << " placements=" << c.placements
        << " firings=" << c.firings << " height=" << c.tree_height
        << " ns_per_digit=" << ns / static_cast<double>(c.length) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic on Zeckendorf (Fibonacci) representations", "zeck"};
  app.require_subcommand(1);

  auto add_binary_op = [&](const char* name, const char* about, Operands& ops, bool trace) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("a", ops.values.emplace_back(), "First operand")->required();
    sub->add_option("b", ops.values.emplace_back(), "Second operand")->required();
    sub->add_flag("--dec", ops.dec, "Operands are decimal");
    if (trace) sub->add_flag("--trace", ops.trace, "Print rule firings to stderr");
    return sub;
  };

  Operands add_ops, sub_ops, mul_ops, div_ops;
  add_ops.values.reserve(2);
  sub_ops.values.reserve(2);
  mul_ops.values.reserve(2);
  div_ops.values.reserve(2);
  CLI::App* add_cmd = add_binary_op("add", "Signed addition", add_ops, true);
  CLI::App* sub_cmd = add_binary_op("sub", "Signed subtraction a - b", sub_ops, true);
  CLI::App* mul_cmd = add_binary_op("mul", "Multiplication", mul_ops, false);
  std::string method = "fenwick";
  mul_cmd->add_option("--method", method, "fenwick or binary")
      ->check(CLI::IsMember({"fenwick", "binary"}));
  CLI::App* div_cmd = add_binary_op("divrem", "Quotient then remainder", div_ops, false);

  Operands sqrt_ops;
  CLI::App* sqrt_cmd = app.add_subcommand("sqrtrem", "Integer square root then remainder");
  sqrt_cmd->add_option("x", sqrt_ops.values.emplace_back(), "Operand")->required();
  sqrt_cmd->add_flag("--dec", sqrt_ops.dec, "Operand is decimal");

  std::string tozeck_value;
  bool tozeck_bin = false;
  CLI::App* tozeck_cmd = app.add_subcommand("tozeck", "Decimal (or binary) to Zeckendorf");
  tozeck_cmd->add_option("value", tozeck_value, "Decimal value")->required();
  tozeck_cmd->add_flag("--bin", tozeck_bin, "Value is a binary string");

  std::string tobin_value;
  bool tobin_dec = false;
  CLI::App* tobin_cmd = app.add_subcommand("tobin", "Zeckendorf to binary (or decimal)");
  tobin_cmd->add_option("digits", tobin_value, "Zeckendorf digit string")->required();
  tobin_cmd->add_flag("--dec", tobin_dec, "Print decimal instead of binary");

  std::string validate_value;
  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a digit string is canonical");
  validate_cmd->add_option("digits", validate_value, "Digit string")->required();

  Operands trace_ops;
  std::string trace_pass;
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "Print rule firings of an addition, or of one pass");
  trace_cmd->add_option("operands", trace_ops.values, "Two operands, or one sequence with --pass")
      ->required()
      ->expected(1, 2);
  trace_cmd->add_option("--pass", trace_pass, "stage1, stage2_rl, stage2_lr or signed_prelim");
  trace_cmd->add_flag("--dec", trace_ops.dec, "Operands are decimal");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time transducer runs on random inputs");
  bench_cmd->add_option("--pass", bench.pass, "Pass id")->required();
  bench_cmd->add_option("--digits", bench.digits, "Input length")->check(CLI::Range(4, 100000000));
  bench_cmd->add_option("--trials", bench.trials, "Number of runs");
  bench_cmd->add_flag("--prefix", bench.prefix, "Use parallel-prefix composition");
  bench_cmd->add_option("--chunk", bench.chunk, "Tree nodes per task")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads, "Worker threads for --prefix")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Random seed");

  std::string codec_in, codec_out;
  CLI::App* codec_cmd = app.add_subcommand("codec", "Fibonacci-code stream files");
  codec_cmd->require_subcommand(1);
  CLI::App* encode_cmd = codec_cmd->add_subcommand("encode", "Decimal lines to a code stream");
  CLI::App* decode_cmd = codec_cmd->add_subcommand("decode", "Code stream to decimal lines");
  for (CLI::App* c : {encode_cmd, decode_cmd}) {
    c->add_option("in", codec_in, "Input file")->required();
    c->add_option("out", codec_out, "Output file")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*add_cmd) return cmd_add(add_ops, false, out, err);
    if (*sub_cmd) return cmd_add(sub_ops, true, out, err);
    if (*mul_cmd) {
      const ZeckSeq a = parse_unsigned(mul_ops.values[0], mul_ops.dec);
      const ZeckSeq b = parse_unsigned(mul_ops.values[1], mul_ops.dec);
      out << (method == "binary" ? mul_binary(a, b) : mul_fenwick(a, b)).str() << '\n';
      return kOk;
    }
    if (*div_cmd) {
      const ZeckSeq x = parse_unsigned(div_ops.values[0], div_ops.dec);
      const ZeckSeq d = parse_unsigned(div_ops.values[1], div_ops.dec);
      const DivRem r = divrem(x, d);
      out << r.quotient.str() << '\n' << r.remainder.str() << '\n';
      return kOk;
    }
    if (*sqrt_cmd) {
      const SqrtRem r = sqrt_rem(parse_unsigned(sqrt_ops.values[0], sqrt_ops.dec));
      out << r.root.str() << '\n' << r.remainder.str() << '\n';
      return kOk;
    }
    if (*tozeck_cmd) {
      const ZeckSeq z = tozeck_bin ? binary_to_zeck(BitSeq::parse(tozeck_value))
                                   : to_zeck(parse_decimal(tozeck_value));
      out << z.str() << '\n';
      return kOk;
    }
    if (*tobin_cmd) {
      const BitSeq b = zeck_to_binary(ZeckSeq::parse(tobin_value));
      out << (tobin_dec ? b.to_natural().str() : b.str()) << '\n';
      return kOk;
    }
    if (*validate_cmd) {
      std::vector<Digit> digits;
      for (char c : validate_value) {
        if (c < '0' || c > '9') {
          throw ContractError("malformed digit string: unexpected character '" +
                              std::string(1, c) + "'");
        }
        digits.push_back(static_cast<Digit>(c - '0'));
      }
      if (digits.empty()) throw ContractError("malformed digit string: empty");
      const bool zero = digits.size() == 1 && digits[0] == 0;
      if (const auto why = zero ? std::nullopt : canonical_violation(digits)) {
        out << "non-canonical: " << *why << '\n';
        return kRejected;
      }
      out << "canonical\n";
      return kOk;
    }
    if (*trace_cmd) return cmd_trace(trace_ops, trace_pass, out);
    if (*bench_cmd) return cmd_bench(bench, err);
    if (*encode_cmd) {
      const std::vector<Natural> values = read_decimal_lines(codec_in);
      write_bytes(codec_out, serialize(encode_stream(values)));
      return kOk;
    }
    if (*decode_cmd) {
      const std::vector<std::uint8_t> bytes = read_bytes(codec_in);
      const std::vector<Natural> values = decode_stream(parse_code_stream(bytes));
      std::ostringstream text;
      for (const Natural& v : values) text << v << '\n';
      const std::string s = text.str();
      write_bytes(codec_out, {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
      return kOk;
    }
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const CorruptionError& e) {
    err << "corrupt stream: " << e.what() << '\n';
    return kRejected;
  } catch (const DivisionByZeroError& e) {
    err << e.what() << '\n';
    return kRejected;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kRejected;
  } catch (const ContractError& e) {
    err << e.what() << '\n';
    return kRejected;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kRejected;
  }
  return kUsage;
}

}  // namespace zeck::cli
