#include "zeck/fib.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "zeck/errors.hpp"

namespace zeck {
namespace {

// std::deque keeps element addresses stable under push_back, which is what
// lets fib() hand out references.
struct FibTable {
  std::shared_mutex mutex;
  std::deque<Natural> values{Natural{0}, Natural{1}};
};

FibTable& table() {
  static FibTable instance;
  return instance;
}

}  // namespace

namespace detail {

const Natural& fib_any(std::size_t k) {
  FibTable& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (k < t.values.size()) return t.values[k];
  }
  std::unique_lock lock(t.mutex);
  while (t.values.size() <= k) {
    const std::size_t n = t.values.size();
    t.values.push_back(t.values[n - 1] + t.values[n - 2]);
  }
  return t.values[k];
}

}  // namespace detail

const Natural& fib(std::size_t k) {
  if (k < 2) throw DomainError("fib: index must be at least 2");
  return detail::fib_any(k);
}

}  // namespace zeck
