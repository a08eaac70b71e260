#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include <staircount/series.hpp>

// Lets doctest print coefficient vectors in failure messages.
inline std::ostream& operator<<(std::ostream& out, const std::vector<mpz_class>& v) {
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  return out << "]";
}

namespace testutil {

inline std::vector<mpz_class> ints(std::initializer_list<long> values) {
  return std::vector<mpz_class>(values.begin(), values.end());
}

inline std::vector<mpz_class> coeffs_of(const staircount::TruncatedSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

inline staircount::TruncatedSeries series_of(std::initializer_list<long> values) {
  return staircount::TruncatedSeries::from_coefficients(ints(values));
}

// 1 + x^step + x^(2*step) + ... truncated at the order; a finite max_mult
// stops the sum at x^(max_mult*step).
inline staircount::TruncatedSeries power_poly(std::size_t order, std::uint64_t step,
                                              std::optional<std::uint64_t> max_mult = {}) {
  std::vector<mpz_class> coeffs(order + 1);
  for (std::uint64_t m = 0; !max_mult || m <= *max_mult; ++m) {
    const std::uint64_t idx = m * step;
    if (idx > order) break;
    coeffs[static_cast<std::size_t>(idx)] = 1;
  }
  return staircount::TruncatedSeries::from_coefficients(std::move(coeffs));
}

}  // namespace testutil
