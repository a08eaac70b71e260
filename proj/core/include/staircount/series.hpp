#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "staircount/cap.hpp"

namespace staircount {

// Formal power series with exact integer coefficients, kept modulo
// x^(order+1).  The truncation order is fixed at construction; no operation
// extends it, and nothing ever rounds.
//
// The in-place factor updates are the workhorse of the counting pipeline:
// multiplying by 1/(1-x^s) or by (1-x^j) touches each coefficient once, so a
// product over a whole step set costs O(order) per factor instead of the
// O(order^2) of a generic convolution.
class TruncatedSeries {
 public:
  // Zero series of the given truncation order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  // Multiplicative identity: 1 + 0x + ... + 0x^order.
  static TruncatedSeries one(std::size_t order);

  // Adopts the coefficient list as-is; the order is coeffs.size() - 1.
  static TruncatedSeries from_coefficients(std::vector<mpz_class> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  // Bounds-checked coefficient of x^i.
  const mpz_class& coeff(std::size_t i) const;

  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }

  // f *= 1/(1 - x^step), i.e. f *= sum_{m>=0} x^(m*step) truncated.
  // Ascending recurrence coeffs[i] += coeffs[i-step] for i = step..order;
  // each read must see the already-updated value.
  void mul_geometric(std::uint64_t step);

  // f *= (1 - x^exponent).  Descending recurrence coeffs[i] -= coeffs[i-exponent]
  // for i = order..exponent; each read must see the pre-update value.
  // No-op when exponent > order.
  void mul_one_minus_power(std::uint64_t exponent);

  // f *= (1 + x^step + ... + x^(M*step)) for a finite cap M, or 1/(1 - x^step)
  // when the cap is unbounded.  The (1 - x^((M+1)step)) numerator is skipped
  // whenever (M+1)*step exceeds the order: below the truncation the two
  // factors agree.
  void mul_capped_factor(std::uint64_t step, const Cap& cap);

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Truncated Cauchy product: result[i] = sum_{j=0..i} f[j] * g[i-j].
// Quadratic; retained as the reference the in-place updates are checked
// against.  Throws std::invalid_argument on order mismatch.
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace staircount
