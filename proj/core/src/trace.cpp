#include "zeck/trace.hpp"

#include <array>
#include <ostream>

namespace zeck {
namespace {

constexpr std::array<std::string_view, 4> kPassNames{"stage1", "stage2_rl", "stage2_lr",
                                                     "signed_prelim"};

}  // namespace

std::string_view to_string(PassId pass) { return kPassNames[static_cast<std::size_t>(pass)]; }

std::optional<PassId> parse_pass_id(std::string_view name) {
  for (std::size_t i = 0; i < kPassNames.size(); ++i) {
    if (kPassNames[i] == name) return static_cast<PassId>(i);
  }
  return std::nullopt;
}

std::size_t window_width(PassId pass) { return pass == PassId::stage1 ? 4 : 3; }

std::string format_firing(PassId pass, const Firing& firing) {
  std::string line(to_string(pass));
  line += " offset=" + std::to_string(firing.offset);
  line += " rule=" + firing.rule;
  line += ' ';
  line += firing.before;
  line += " -> ";
  line += firing.after;
  return line;
}

void write_trace(std::ostream& out, const PassTrace& trace) {
  for (const Firing& f : trace.snapshots) out << format_firing(trace.pass, f) << '\n';
}

}  // namespace zeck
