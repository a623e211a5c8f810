#pragma once

// Window rewrite rules shared by the direct passes and the transducer
// compiler. Every rule preserves Σ d_k F_k by the Fibonacci recurrence.
// Windows are read left to right, most significant digit first.

#include <array>
#include <cstddef>

namespace zeck::detail {

/// Stage-1 rules on a width-4 window; returns the rule name or nullptr.
/// The first three symbols decide, so at most one rule matches.
template <class D>
const char* stage1_rule(D* w) {
  if (w[0] != 0) return nullptr;
  if (w[2] == 0 && w[1] == 2) {
    w[0] = 1, w[1] = 0, ++w[3];
    return "020x";
  }
  if (w[2] == 0 && w[1] == 3) {
    w[0] = 1, w[1] = 1, ++w[3];
    return "030x";
  }
  if (w[1] == 2 && w[2] == 1) {
    w[0] = 1, w[1] = 1, w[2] = 0;
    return "021x";
  }
  if (w[1] == 1 && w[2] == 2) {
    w[0] = 1, w[1] = 0, w[2] = 1;
    return "012x";
  }
  return nullptr;
}

struct CleanupStep {
  const char* rule = nullptr;
  std::size_t offset = 0;  // relative to the window start
  std::size_t width = 0;
};

struct CleanupResult {
  std::array<CleanupStep, 2> steps{};
  std::size_t count = 0;
  bool ok = true;

  void add(const char* rule, std::size_t offset, std::size_t width) {
    steps[count++] = CleanupStep{rule, offset, width};
  }
};

/// Stage-1 cleanup on the final 4-digit window. The third position is
/// examined first, then the fourth. `ok` is false if any digit above 1
/// survives.
///
/// "021" covers a 2 created in the fourth position by the last placement and
/// followed by an input 1 (2F_3 + F_2 = F_4 + F_3).
template <class D>
CleanupResult stage1_cleanup(D* w) {
  CleanupResult r;
  if (w[2] == 3) {
    if (w[1] == 0 && w[3] == 0) {
      w[1] = 1, w[2] = 1, w[3] = 1;
      r.add("end:030", 1, 3);
    } else {
      r.ok = false;
    }
  } else if (w[2] == 2) {
    if (w[3] == 0 && w[1] == 0) {
      w[1] = 1, w[2] = 0, w[3] = 1;
      r.add("end:020", 1, 3);
    } else if (w[3] == 0 && w[0] == 0 && w[1] == 1) {
      w[0] = 1, w[1] = 0, w[2] = 1, w[3] = 0;
      r.add("end:0120", 0, 4);
    } else if (w[3] == 1 && w[1] == 0) {
      w[1] = 1, w[2] = 1, w[3] = 0;
      r.add("end:021", 1, 3);
    } else {
      r.ok = false;
    }
  }
  // A third-position rewrite always leaves the fourth position at most 1.
  if (r.ok && r.count == 0) {
    if (w[3] == 3) {
      if (w[2] == 0) {
        w[2] = 1, w[3] = 1;
        r.add("end:03", 2, 2);
      } else {
        r.ok = false;
      }
    } else if (w[3] == 2) {
      if (w[2] == 0) {
        w[2] = 1, w[3] = 0;
        r.add("end:02", 2, 2);
      } else if (w[1] == 0 && w[2] == 1) {
        w[1] = 1, w[2] = 0, w[3] = 1;
        r.add("end:012", 1, 3);
      } else {
        r.ok = false;
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (w[i] > 1) r.ok = false;
  }
  return r;
}

/// 011 -> 100 on a width-3 window.
template <class D>
bool stage2_rule(D* w) {
  if (w[0] == 0 && w[1] == 1 && w[2] == 1) {
    w[0] = 1, w[1] = 0, w[2] = 0;
    return true;
  }
  return false;
}

/// The same rule seen through a reversed sequence: 110 -> 001.
template <class D>
bool stage2_rule_mirrored(D* w) {
  if (w[0] == 1 && w[1] == 1 && w[2] == 0) {
    w[0] = 0, w[1] = 0, w[2] = 1;
    return true;
  }
  return false;
}

/// Preliminary-pass rules for signed addition (width 3, -1 written N).
/// Only windows led by a 1 or 2 can match.
template <class D>
const char* prelim_rule(D* w) {
  const int a = w[0], b = w[1], c = w[2];
  if (a != 1 && a != 2) return nullptr;
  auto set = [w](int x, int y, int z) {
    w[0] = static_cast<D>(x), w[1] = static_cast<D>(y), w[2] = static_cast<D>(z);
  };
  if (a == 1) {
    if (b == 0 && c == 0) return set(0, 1, 1), "100";
    if (b == -1 && c == 0) return set(0, 0, 1), "1N0";
    if (b == -1 && c == 1) return set(0, 0, 2), "1N1";
    if (b == 0 && c == -1) return set(0, 1, 0), "10N";
  } else {
    if (b == 0 && c == 0) return set(1, 1, 1), "200";
    if (b == -1 && c == 0) return set(1, 0, 1), "2N0";
    if (b == -1 && c == 1) return set(1, 0, 2), "2N1";
    if (b == 0 && c == -1) return set(1, 1, 0), "20N";
  }
  return nullptr;
}

/// Right-end cleanup of the preliminary pass on the final two digits: a -1 in
/// the F_2 position is absorbed by the digit before it (F_3 - F_2 = F_2).
/// `ok` is false if a -1 or a digit outside {0,1,2} remains.
template <class D>
CleanupResult prelim_cleanup(D* w) {
  CleanupResult r;
  if (w[1] == -1) {
    if (w[0] == 1) {
      w[0] = 0, w[1] = 1;
      r.add("end:1N", 0, 2);
    } else if (w[0] == 2) {
      w[0] = 1, w[1] = 1;
      r.add("end:2N", 0, 2);
    }
  }
  for (int i = 0; i < 2; ++i) {
    if (w[i] < 0 || w[i] > 2) r.ok = false;
  }
  return r;
}

}  // namespace zeck::detail
