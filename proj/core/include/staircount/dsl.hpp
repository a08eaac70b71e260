#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "staircount/step_set.hpp"

namespace staircount {

// Raised when a step-set expression is rejected.  position is the 0-based
// character offset at (or just before) the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message,
             std::vector<std::string> expected = {});

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Step-set expression grammar:
//
//   spec     := term ("|" term)*                 union of the terms
//   term     := "all" | "even" | "odd" | "primes" | "fibonacci"
//             | INT ".." INT                     closed range a..b
//             | INT ".."                         open range: every s >= a
//             | "{" INT ("," INT)* "}"           explicit finite set
//   INT      := decimal integer >= 1
//
// Keywords are case-insensitive; whitespace between tokens is insignificant.
StepSetSpec parse_step_set(std::string_view text);

// Canonical text: lowercase keywords, explicit sets ascending with no spaces,
// union members in order joined by "|".  parse_step_set(format_step_set(s))
// reproduces s up to canonicalization.
std::string format_step_set(const StepSetSpec& spec);

}  // namespace staircount
