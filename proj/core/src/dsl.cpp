#include "staircount/dsl.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

namespace staircount {

namespace {

std::string render(std::size_t position, const std::string& message,
                   const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << "parse error at offset " << position << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      out << (i ? ", " : "") << expected[i];
    out << ")";
  }
  return out.str();
}

const std::vector<std::string> kTermExpectations = {
    "all", "even", "odd", "primes", "fibonacci", "an integer", "'{'"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  StepSetSpec parse() {
    std::vector<StepSetSpec> terms;
    terms.push_back(parse_term());
    skip_ws();
    while (!at_end() && peek() == '|') {
      ++pos_;
      terms.push_back(parse_term());
      skip_ws();
    }
    if (!at_end())
      fail(pos_, "trailing characters after step-set expression", {"'|'", "end of input"});
    if (terms.size() == 1) return std::move(terms.front());
    return StepSetSpec::union_of(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(std::size_t position, const std::string& message,
                         std::vector<std::string> expected = {}) {
    throw ParseError(position, message, std::move(expected));
  }

  StepSetSpec parse_term() {
    skip_ws();
    if (at_end()) fail(pos_, "expected a step-set term", kTermExpectations);
    const char c = peek();
    if (c == '{') return parse_explicit();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_range();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_keyword();
    fail(pos_, "unexpected character", kTermExpectations);
  }

  StepSetSpec parse_keyword() {
    const std::size_t start = pos_;
    std::string word;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(peek()))));
      ++pos_;
    }
    if (word == "all") return StepSetSpec::all();
    if (word == "even") return StepSetSpec::even();
    if (word == "odd") return StepSetSpec::odd();
    if (word == "primes") return StepSetSpec::primes();
    if (word == "fibonacci") return StepSetSpec::fibonacci();
    fail(start, "unknown keyword '" + word + "'",
         {"all", "even", "odd", "primes", "fibonacci"});
  }

  std::uint64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail(pos_, "expected an integer", {"an integer"});
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        fail(start, "integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (value == 0) fail(start, "step sizes must be >= 1");
    return value;
  }

  StepSetSpec parse_range() {
    const std::uint64_t lo = parse_int();
    skip_ws();
    if (at_end() || peek() != '.' || pos_ + 1 >= text_.size() || text_[pos_ + 1] != '.')
      fail(pos_, "expected '..' after range start", {"'..'"});
    pos_ += 2;
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      return StepSetSpec::at_least(lo);
    const std::size_t hi_start = pos_;
    const std::uint64_t hi = parse_int();
    if (lo > hi)
      fail(hi_start, "range lower bound " + std::to_string(lo) +
                         " exceeds upper bound " + std::to_string(hi));
    return StepSetSpec::range(lo, hi);
  }

  StepSetSpec parse_explicit() {
    ++pos_;  // consume '{'
    skip_ws();
    if (!at_end() && peek() == '}')
      fail(pos_, "empty step set", {"an integer"});
    std::vector<std::uint64_t> values;
    values.push_back(parse_int());
    for (;;) {
      skip_ws();
      if (at_end()) fail(pos_, "unterminated step set", {"','", "'}'"});
      if (peek() == ',') {
        ++pos_;
        values.push_back(parse_int());
        continue;
      }
      if (peek() == '}') {
        ++pos_;
        return StepSetSpec::explicit_set(std::move(values));
      }
      fail(pos_, "expected ',' or '}' in step set", {"','", "'}'"});
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const StepSetSpec& spec, std::ostringstream& out) {
  switch (spec.kind()) {
    case StepSetSpec::Kind::All: out << "all"; return;
    case StepSetSpec::Kind::Even: out << "even"; return;
    case StepSetSpec::Kind::Odd: out << "odd"; return;
    case StepSetSpec::Kind::Primes: out << "primes"; return;
    case StepSetSpec::Kind::Fibonacci: out << "fibonacci"; return;
    case StepSetSpec::Kind::Range: out << spec.lo() << ".." << spec.hi(); return;
    case StepSetSpec::Kind::AtLeast: out << spec.lo() << ".."; return;
    case StepSetSpec::Kind::Explicit: {
      out << '{';
      const auto& vs = spec.values();
      for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
      out << '}';
      return;
    }
    case StepSetSpec::Kind::Union: {
      const auto& ms = spec.members();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out << '|';
        format_into(ms[i], out);
      }
      return;
    }
  }
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message,
                       std::vector<std::string> expected)
    : std::runtime_error(render(position, message, expected)),
      position_(position),
      message_(message),
      expected_(std::move(expected)) {}

StepSetSpec parse_step_set(std::string_view text) { return Parser(text).parse(); }

std::string format_step_set(const StepSetSpec& spec) {
  std::ostringstream out;
  format_into(spec, out);
  return out.str();
}

}  // namespace staircount
