#include "staircount/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace staircount::oracle {

namespace {

std::uint64_t partitions_rec(const std::vector<std::uint64_t>& steps_desc,
                             std::size_t idx, std::uint64_t remaining,
                             const Cap& cap) {
  if (remaining == 0) return 1;
  if (idx == steps_desc.size()) return 0;
  const std::uint64_t step = steps_desc[idx];
  std::uint64_t max_mult = remaining / step;
  if (!cap.is_unbounded()) max_mult = std::min(max_mult, cap.max_mult());
  std::uint64_t total = 0;
  for (std::uint64_t m = 0; m <= max_mult; ++m)
    total += partitions_rec(steps_desc, idx + 1, remaining - m * step, cap);
  return total;
}

std::uint64_t compositions_rec(const std::vector<std::uint64_t>& steps_asc,
                               std::vector<std::uint64_t>& used,
                               std::uint64_t remaining, const Cap& cap) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < steps_asc.size(); ++i) {
    if (steps_asc[i] > remaining) break;
    if (!cap.is_unbounded() && used[i] == cap.max_mult()) continue;
    ++used[i];
    total += compositions_rec(steps_asc, used, remaining - steps_asc[i], cap);
    --used[i];
  }
  return total;
}

}  // namespace

std::uint64_t count_partitions(const StepSetSpec& steps, const Cap& cap,
                               std::uint64_t n) {
  if (n > kMaxPartitionTarget)
    throw std::invalid_argument("oracle::count_partitions: n = " + std::to_string(n) +
                                " exceeds the brute-force guard " +
                                std::to_string(kMaxPartitionTarget));
  std::vector<std::uint64_t> step_values = steps.enumerate_upto(n);
  std::sort(step_values.begin(), step_values.end(), std::greater<>());
  return partitions_rec(step_values, 0, n, cap);
}

std::uint64_t count_compositions(const StepSetSpec& steps, const Cap& cap,
                                 std::uint64_t n) {
  if (n > kMaxCompositionTarget)
    throw std::invalid_argument("oracle::count_compositions: n = " + std::to_string(n) +
                                " exceeds the brute-force guard " +
                                std::to_string(kMaxCompositionTarget));
  const std::vector<std::uint64_t> step_values = steps.enumerate_upto(n);
  std::vector<std::uint64_t> used(step_values.size(), 0);
  return compositions_rec(step_values, used, n, cap);
}

}  // namespace staircount::oracle
