#include "staircount/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace staircount {

TruncatedSeries partition_series(const StepSetSpec& steps, const Cap& cap,
                                 std::size_t order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (std::uint64_t s : steps.enumerate_upto(order))
    acc.mul_capped_factor(s, cap);
  return acc;
}

mpz_class count_partitions(const CountQuery& query) {
  const auto n = static_cast<std::size_t>(query.n);
  return partition_series(query.steps, query.cap, n).coeff(n);
}

namespace {

// Steps descending, multiplicities tried largest first: the output order is
// lexicographic by descending part.
void emit_partitions(const std::vector<std::uint64_t>& steps_desc, std::size_t idx,
                     std::uint64_t remaining, const Cap& cap,
                     std::map<std::uint64_t, std::uint64_t>& current,
                     std::uint64_t total, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{current, total});
    return;
  }
  if (idx == steps_desc.size()) return;
  const std::uint64_t step = steps_desc[idx];
  std::uint64_t max_mult = remaining / step;
  if (!cap.is_unbounded()) max_mult = std::min(max_mult, cap.max_mult());
  for (std::uint64_t m = max_mult + 1; m-- > 0;) {
    if (m > 0)
      current[step] = m;
    else
      current.erase(step);
    emit_partitions(steps_desc, idx + 1, remaining - m * step, cap, current, total, out);
  }
  current.erase(step);
}

}  // namespace

std::vector<Partition> enumerate_partitions(const CountQuery& query,
                                            std::uint64_t limit) {
  if (query.n > limit)
    throw std::invalid_argument("enumerate_partitions: n = " + std::to_string(query.n) +
                                " exceeds the enumeration limit " + std::to_string(limit));
  std::vector<std::uint64_t> steps = query.steps.enumerate_upto(query.n);
  std::sort(steps.begin(), steps.end(), std::greater<>());
  std::vector<Partition> out;
  std::map<std::uint64_t, std::uint64_t> current;
  emit_partitions(steps, 0, query.n, query.cap, current, query.n, out);
  return out;
}

mpz_class count_compositions(const StepSetSpec& steps, const Cap& cap,
                             std::uint64_t n, std::uint64_t limit) {
  if (n == 0) return 1;  // the empty climb
  if (cap.is_unbounded()) {
    const auto step_values = steps.enumerate_upto(n);
    std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i)
      for (std::uint64_t s : step_values) {
        if (s > i) break;
        ways[static_cast<std::size_t>(i)] += ways[static_cast<std::size_t>(i - s)];
      }
    return ways[static_cast<std::size_t>(n)];
  }
  // Capped: per-step usage bounds make a recurrence state explode, so count
  // orderings partition by partition.
  mpz_class total = 0;
  std::vector<std::uint64_t> mults;
  for (const Partition& p : enumerate_partitions(CountQuery{steps, cap, n}, limit)) {
    mults.clear();
    for (const auto& [step, mult] : p.parts) mults.push_back(mult);
    total += multinomial(mults);
  }
  return total;
}

mpz_class multinomial(std::span<const std::uint64_t> multiplicities) {
  if (multiplicities.empty())
    throw std::invalid_argument("multinomial: multiplicity list must be nonempty");
  mpz_class result = 1;
  mpz_class binom;
  std::uint64_t placed = 0;
  for (std::uint64_t m : multiplicities) {
    placed += m;
    mpz_bin_uiui(binom.get_mpz_t(), placed, m);
    result *= binom;
  }
  return result;
}

}  // namespace staircount
