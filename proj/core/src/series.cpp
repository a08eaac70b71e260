#include "staircount/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace staircount {

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<mpz_class> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument(
        "TruncatedSeries::from_coefficients: coefficient list must be nonempty");
  TruncatedSeries s(coeffs.size() - 1);
  s.coeffs_ = std::move(coeffs);
  return s;
}

const mpz_class& TruncatedSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size())
    throw std::out_of_range("TruncatedSeries::coeff: index " + std::to_string(i) +
                            " exceeds order " + std::to_string(order()));
  return coeffs_[i];
}

void TruncatedSeries::mul_geometric(std::uint64_t step) {
  if (step == 0)
    throw std::invalid_argument("mul_geometric: step must be >= 1");
  for (std::size_t i = static_cast<std::size_t>(step); i < coeffs_.size(); ++i)
    coeffs_[i] += coeffs_[i - step];
}

void TruncatedSeries::mul_one_minus_power(std::uint64_t exponent) {
  if (exponent == 0)
    throw std::invalid_argument("mul_one_minus_power: exponent must be >= 1");
  if (exponent > order()) return;
  for (std::size_t i = coeffs_.size(); i-- > exponent;)
    coeffs_[i] -= coeffs_[i - exponent];
}

void TruncatedSeries::mul_capped_factor(std::uint64_t step, const Cap& cap) {
  mul_geometric(step);  // validates step >= 1
  if (cap.is_unbounded()) return;
  const std::uint64_t slots = order() / step;  // largest m with m*step <= order
  if (cap.max_mult() < slots)
    mul_one_minus_power((cap.max_mult() + 1) * step);
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("series product: order mismatch (" +
                                std::to_string(f.order()) + " vs " +
                                std::to_string(g.order()) + ")");
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<mpz_class> result(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      result[i] += a[j] * b[i - j];
  return TruncatedSeries::from_coefficients(std::move(result));
}

}  // namespace staircount
