#pragma once

#include <cstdint>
#include <vector>

#include "staircount/cap.hpp"

namespace staircount {

// Symbolic description of a set of allowed step sizes: distinct positive
// integers, possibly an infinite family.  Sets are never materialized in
// full; enumerate_upto() yields the finite slice below a bound, which is all
// that coefficients up to x^bound can depend on.
class StepSetSpec {
 public:
  enum class Kind {
    All,        // every positive integer
    Even,       // 2, 4, 6, ...
    Odd,        // 1, 3, 5, ...
    Primes,     // 2, 3, 5, 7, ...
    Fibonacci,  // distinct values 1, 2, 3, 5, 8, ...
    Range,      // lo..hi inclusive
    AtLeast,    // lo.. with open upper end, resolved per query
    Explicit,   // finite set, stored ascending and deduplicated
    Union,      // flattened, nonempty member list
  };

  static StepSetSpec all() { return StepSetSpec(Kind::All); }
  static StepSetSpec even() { return StepSetSpec(Kind::Even); }
  static StepSetSpec odd() { return StepSetSpec(Kind::Odd); }
  static StepSetSpec primes() { return StepSetSpec(Kind::Primes); }
  static StepSetSpec fibonacci() { return StepSetSpec(Kind::Fibonacci); }

  // Requires 1 <= lo <= hi.
  static StepSetSpec range(std::uint64_t lo, std::uint64_t hi);

  // Every step size >= lo; requires lo >= 1.
  static StepSetSpec at_least(std::uint64_t lo);

  // Values must be positive; duplicates collapse, order is normalized.
  static StepSetSpec explicit_set(std::vector<std::uint64_t> values);

  // Nested unions are spliced into one flat member list; must be nonempty.
  static StepSetSpec union_of(std::vector<StepSetSpec> members);

  Kind kind() const noexcept { return kind_; }

  std::uint64_t lo() const noexcept { return lo_; }  // Range, AtLeast
  std::uint64_t hi() const noexcept { return hi_; }  // Range

  const std::vector<std::uint64_t>& values() const noexcept { return values_; }  // Explicit
  const std::vector<StepSetSpec>& members() const noexcept { return members_; }  // Union

  // Exactly the elements of the set that are <= bound, strictly ascending,
  // no duplicates.
  std::vector<std::uint64_t> enumerate_upto(std::uint64_t bound) const;

  bool operator==(const StepSetSpec&) const = default;

 private:
  explicit StepSetSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::vector<std::uint64_t> values_;
  std::vector<StepSetSpec> members_;
};

}  // namespace staircount
