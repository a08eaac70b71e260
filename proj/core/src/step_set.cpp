#include "staircount/step_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace staircount {

namespace {

std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    if (p > bound / p) continue;  // p*p would overflow / exceed bound
    for (std::uint64_t q = p * p; q <= bound; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

// Distinct Fibonacci values 1, 2, 3, 5, 8, ... (the duplicate leading 1 of
// the raw sequence is collapsed).
std::vector<std::uint64_t> fibonacci_upto(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  std::uint64_t a = 1, b = 2;
  while (a <= bound) {
    out.push_back(a);
    const std::uint64_t next = a + b;
    if (next < b) break;  // overflow; nothing larger fits anyway
    a = b;
    b = next;
  }
  return out;
}

std::vector<std::uint64_t> consecutive(std::uint64_t lo, std::uint64_t hi_inclusive) {
  std::vector<std::uint64_t> out;
  if (lo > hi_inclusive) return out;
  out.reserve(static_cast<std::size_t>(hi_inclusive - lo + 1));
  for (std::uint64_t v = lo; v <= hi_inclusive; ++v) {
    out.push_back(v);
    if (v == hi_inclusive) break;  // guards v == UINT64_MAX
  }
  return out;
}

std::vector<std::uint64_t> strided(std::uint64_t start, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = start; v <= bound; v += 2) {
    out.push_back(v);
    if (bound - v < 2) break;
  }
  return out;
}

}  // namespace

StepSetSpec StepSetSpec::range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || lo > hi)
    throw std::invalid_argument("StepSetSpec::range: requires 1 <= lo <= hi");
  StepSetSpec s(Kind::Range);
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

StepSetSpec StepSetSpec::at_least(std::uint64_t lo) {
  if (lo < 1)
    throw std::invalid_argument("StepSetSpec::at_least: requires lo >= 1");
  StepSetSpec s(Kind::AtLeast);
  s.lo_ = lo;
  return s;
}

StepSetSpec StepSetSpec::explicit_set(std::vector<std::uint64_t> values) {
  for (std::uint64_t v : values)
    if (v == 0)
      throw std::invalid_argument("StepSetSpec::explicit_set: step sizes must be positive");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  StepSetSpec s(Kind::Explicit);
  s.values_ = std::move(values);
  return s;
}

StepSetSpec StepSetSpec::union_of(std::vector<StepSetSpec> members) {
  std::vector<StepSetSpec> flat;
  for (StepSetSpec& m : members) {
    if (m.kind_ == Kind::Union)
      for (StepSetSpec& inner : m.members_) flat.push_back(std::move(inner));
    else
      flat.push_back(std::move(m));
  }
  if (flat.empty())
    throw std::invalid_argument("StepSetSpec::union_of: member list must be nonempty");
  StepSetSpec s(Kind::Union);
  s.members_ = std::move(flat);
  return s;
}

std::vector<std::uint64_t> StepSetSpec::enumerate_upto(std::uint64_t bound) const {
  switch (kind_) {
    case Kind::All:
      return consecutive(1, bound);
    case Kind::Even:
      return bound < 2 ? std::vector<std::uint64_t>{} : strided(2, bound);
    case Kind::Odd:
      return bound < 1 ? std::vector<std::uint64_t>{} : strided(1, bound);
    case Kind::Primes:
      return primes_upto(bound);
    case Kind::Fibonacci:
      return fibonacci_upto(bound);
    case Kind::Range:
      return bound < lo_ ? std::vector<std::uint64_t>{}
                         : consecutive(lo_, std::min(hi_, bound));
    case Kind::AtLeast:
      return bound < lo_ ? std::vector<std::uint64_t>{} : consecutive(lo_, bound);
    case Kind::Explicit: {
      std::vector<std::uint64_t> out;
      for (std::uint64_t v : values_) {
        if (v > bound) break;
        out.push_back(v);
      }
      return out;
    }
    case Kind::Union: {
      std::vector<std::uint64_t> out;
      for (const StepSetSpec& m : members_) {
        const auto part = m.enumerate_upto(bound);
        out.insert(out.end(), part.begin(), part.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

}  // namespace staircount
