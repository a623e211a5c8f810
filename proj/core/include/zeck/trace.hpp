#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zeck {

/// The four window passes. Text names match the trace and CLI syntax.
enum class PassId : std::uint8_t { stage1, stage2_rl, stage2_lr, signed_prelim };

std::string_view to_string(PassId pass);
std::optional<PassId> parse_pass_id(std::string_view name);
/// 4 for stage1, 3 for the others.
std::size_t window_width(PassId pass);

/// One rule application. Digits are rendered with digit_char ('N' is -1).
/// Cleanup rewrites at the right end use rule names prefixed "end:".
struct Firing {
  std::size_t offset = 0;
  std::string rule;
  std::string before;
  std::string after;
};

/// Work accounting for one pass over a sequence of `length` digits.
///
/// `steps` counts window placements and is always max(0, length - width + 1);
/// `firings` counts window-rule applications (<= steps); end-of-sequence
/// cleanup rewrites are counted separately in `cleanups`. Snapshots are only
/// collected when `record` is set before the pass runs.
struct PassTrace {
  PassId pass = PassId::stage1;
  std::size_t length = 0;
  std::size_t steps = 0;
  std::size_t firings = 0;
  std::size_t cleanups = 0;
  bool record = false;
  std::vector<Firing> snapshots;
};

/// `<pass_id> offset=<i> rule=<name> <before> -> <after>`
std::string format_firing(PassId pass, const Firing& firing);

/// Writes one line per recorded firing.
void write_trace(std::ostream& out, const PassTrace& trace);

}  // namespace zeck
