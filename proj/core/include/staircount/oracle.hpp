#pragma once

#include <cstdint>

#include "staircount/cap.hpp"
#include "staircount/step_set.hpp"

// Brute-force reference counts.  No series arithmetic anywhere in here: these
// recursions are what the fast engine is validated against, so they share
// nothing with it beyond the step-set and cap types.
namespace staircount::oracle {

inline constexpr std::uint64_t kMaxPartitionTarget = 60;
inline constexpr std::uint64_t kMaxCompositionTarget = 20;

// Exhaustive count of multiplicity-capped partitions of n, by trying every
// multiplicity of every step in descending order.  Exponential time; rejects
// n > kMaxPartitionTarget.
std::uint64_t count_partitions(const StepSetSpec& steps, const Cap& cap,
                               std::uint64_t n);

// Exhaustive depth-first count of ordered step sequences summing to n, with
// per-value usage counters.  Rejects n > kMaxCompositionTarget.
std::uint64_t count_compositions(const StepSetSpec& steps, const Cap& cap,
                                 std::uint64_t n);

}  // namespace staircount::oracle
