#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "staircount/cap.hpp"
#include "staircount/series.hpp"
#include "staircount/step_set.hpp"

namespace staircount {

// One way of writing `total` as a sum of steps: step size -> multiplicity.
// Steps with multiplicity zero are absent.
struct Partition {
  std::map<std::uint64_t, std::uint64_t> parts;
  std::uint64_t total = 0;

  bool operator==(const Partition&) const = default;
};

struct CountQuery {
  StepSetSpec steps;
  Cap cap;
  std::uint64_t n = 0;
};

// Partition enumeration (and with it capped composition counting) refuses
// targets above this unless the caller raises the limit explicitly.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 60;

// Coefficients 0..order of the product, over every step s <= order in the
// set, of (1 - x^((M+1)s)) / (1 - x^s).  The coefficient of x^i is the number
// of ways to write i as a sum of steps from the set with every multiplicity
// at most M; the coefficient of x^0 is always 1.
TruncatedSeries partition_series(const StepSetSpec& steps, const Cap& cap,
                                 std::size_t order);

// Number of multiplicity-capped partitions of query.n; 1 for n = 0.
mpz_class count_partitions(const CountQuery& query);

// Materializes every counted partition, sorted lexicographically by
// descending part.  Throws when query.n exceeds the limit.
std::vector<Partition> enumerate_partitions(
    const CountQuery& query, std::uint64_t limit = kDefaultEnumerationLimit);

// Ordered step sequences summing to n, each distinct step value used at most
// M times.  The unbounded path runs the forward recurrence
// c(i) = sum_{s in S, s <= i} c(i-s); the capped path sums one multinomial
// per partition and is subject to the enumeration limit.
mpz_class count_compositions(const StepSetSpec& steps, const Cap& cap,
                             std::uint64_t n,
                             std::uint64_t limit = kDefaultEnumerationLimit);

// (sum m_i)! / prod(m_i!), exactly: the number of orderings of a multiset
// with the given value multiplicities.  The list must be nonempty.
mpz_class multinomial(std::span<const std::uint64_t> multiplicities);

}  // namespace staircount
