#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircount {

// Multiplicity bound for a single step size: either a finite maximum M >= 1
// or no bound at all.
class Cap {
 public:
  static Cap unbounded() noexcept { return Cap(0); }

  static Cap finite(std::uint64_t max_mult) {
    if (max_mult == 0)
      throw std::invalid_argument("Cap::finite: maximum multiplicity must be >= 1");
    return Cap(max_mult);
  }

  bool is_unbounded() const noexcept { return max_mult_ == 0; }

  // Finite caps only.
  std::uint64_t max_mult() const {
    if (is_unbounded())
      throw std::logic_error("Cap::max_mult: cap is unbounded");
    return max_mult_;
  }

  friend bool operator==(const Cap&, const Cap&) = default;

 private:
  explicit Cap(std::uint64_t max_mult) noexcept : max_mult_(max_mult) {}

  std::uint64_t max_mult_;  // 0 encodes "unbounded"
};

inline std::string to_string(const Cap& cap) {
  return cap.is_unbounded() ? "unbounded" : std::to_string(cap.max_mult());
}

}  // namespace staircount
