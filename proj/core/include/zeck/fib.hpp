#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeck {

/// Arbitrary-precision integer. `Natural` marks values that are non-negative
/// by contract; the representation is shared so no conversions are needed.
using Integer = boost::multiprecision::cpp_int;
using Natural = boost::multiprecision::cpp_int;

/// F_k with F_2 = 1, F_3 = 2. Throws DomainError for k < 2.
///
/// Values are memoized in a process-wide table that grows on demand; the
/// returned reference stays valid for the life of the process. Safe to call
/// concurrently.
const Natural& fib(std::size_t k);

namespace detail {
/// Same table, but also serves F_0 = 0 and F_1 = 1 for internal identities.
const Natural& fib_any(std::size_t k);
}  // namespace detail

}  // namespace zeck
