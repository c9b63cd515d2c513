#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

namespace pltower::cli {

/// Runs each randomized property suite `count` times and prints one
/// PASS/FAIL line per suite. True iff every suite passed.
bool run_selftest(std::uint64_t seed, std::size_t count, std::ostream& out);

}  // namespace pltower::cli
