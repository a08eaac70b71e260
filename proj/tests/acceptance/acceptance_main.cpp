// Acceptance suite: every release-gating check, one pass/fail line each.
// Exits nonzero if any check fails.  argv[1] optionally overrides the
// repository data directory.

#include "support/bindings.hpp"
#include "support/helpers.hpp"
#include "support/pentagonal.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <staircount/dsl.hpp>
#include <staircount/engine.hpp>
#include <staircount/oeis.hpp>
#include <staircount/oracle.hpp>

using namespace staircount;
namespace fs = std::filesystem;

namespace {

std::string g_data_dir = STAIRCOUNT_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

Cap cap_from(unsigned max_mult) {
  return max_mult == 0 ? Cap::unbounded() : Cap::finite(max_mult);
}

// --- criterion 1: the printed series prefixes reproduce exactly -------------

Outcome printed_series_reproduction() {
  struct Row {
    const char* label;
    const char* steps;
    unsigned max_mult;  // 0 = unbounded
    std::vector<long> prefix;
  };
  const Row rows[] = {
      {"classic partitions", "all", 0, {1, 1, 2, 3, 5, 7}},
      {"distinct parts", "all", 1, {1, 1, 1, 2, 2, 3}},
      {"Q1 even distinct", "even", 1, {1, 0, 1, 0, 1, 0, 2}},
      {"Q1 odd distinct", "odd", 1, {1, 1, 0, 1, 1, 1}},
      {"Q3 at least two", "2..", 0, {1, 0, 1, 1, 2, 2}},
      {"Q4 one or two", "{1,2}", 0, {1, 1, 2, 2, 3, 3}},
      {"Q5 even", "even", 0, {1, 0, 1, 0, 2, 0, 3}},
      {"Q5 odd", "odd", 0, {1, 1, 1, 2, 2, 3}},
      {"Q6 cap two", "all", 2, {1, 1, 2, 2, 4, 5}},
      {"Q8 primes", "primes", 0, {1, 0, 1, 1, 1, 2}},
      {"Q8 primes distinct", "primes", 1, {1, 0, 1, 1, 0, 2}},
      {"Q9 fibonacci", "fibonacci", 0, {1, 1, 2, 3, 4, 6}},
      {"Q9 fibonacci distinct", "fibonacci", 1, {1, 1, 1, 2, 1, 2}},
      {"Q2 k=3", "{3}", 3, {1, 0, 0, 1, 0, 0, 1, 0, 0, 1}},
  };
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  int matched = 0;
  for (const Row& row : rows) {
    const auto series = partition_series(parse_step_set(row.steps), cap_from(row.max_mult),
                                         row.prefix.size() - 1);
    bool ok = true;
    for (std::size_t i = 0; i < row.prefix.size(); ++i)
      ok = ok && series.coeff(i) == row.prefix[i];
    if (ok)
      ++matched;
    else
      out.fail(std::string(row.label) + " diverges");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) out.fail("took " + fmt_seconds(elapsed) + " (budget 1 s)");
  out.detail = std::to_string(matched) + "/14 prefixes exact, " + fmt_seconds(elapsed);
  return out;
}

// --- criterion 2: singleton step sets -----------------------------------------

Outcome singleton_structure() {
  Outcome out;
  for (std::uint64_t k = 1; k <= 6; ++k) {
    const StepSetSpec single = StepSetSpec::explicit_set({k});
    const auto capped = partition_series(single, Cap::finite(k), k * k + k);
    for (std::size_t i = 0; i <= k * k + k; ++i) {
      const bool hit = i % k == 0 && i <= k * k;
      if (capped.coeff(i) != (hit ? 1 : 0)) {
        out.fail("capped k=" + std::to_string(k) + " wrong at " + std::to_string(i));
        break;
      }
    }
    const auto unbounded = partition_series(single, Cap::unbounded(), 6 * k);
    for (std::size_t i = 0; i <= 6 * k; ++i) {
      if (unbounded.coeff(i) != (i % k == 0 ? 1 : 0)) {
        out.fail("unbounded k=" + std::to_string(k) + " wrong at " + std::to_string(i));
        break;
      }
    }
  }
  if (out.pass) out.detail = "k = 1..6 exact, both cap regimes";
  return out;
}

// --- criterion 3: bounded ranges lead with 1 + x^a ----------------------------

Outcome range_leading_behavior() {
  Outcome out;
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{2, 5}, {3, 7}, {4, 4}};
  for (const auto& [a, b] : cases) {
    const auto series = partition_series(StepSetSpec::range(a, b), Cap::unbounded(), a);
    bool ok = series.coeff(0) == 1 && series.coeff(a) == 1;
    for (std::size_t i = 1; i < a; ++i) ok = ok && series.coeff(i) == 0;
    if (!ok)
      out.fail("range " + std::to_string(a) + ".." + std::to_string(b) + " wrong prefix");
  }
  if (out.pass) out.detail = "(2,5), (3,7), (4,4) exact";
  return out;
}

// --- criterion 4: engine equals brute force on the full grid ------------------

Outcome oracle_grid() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  const char* partition_specs[] = {"all",   "even", "odd", "primes", "fibonacci",
                                   "{1,2}", "{3}",  "2..", "3..7"};
  const unsigned caps[] = {1, 2, 3, 0};
  std::size_t cells = 0;
  for (const char* spec_text : partition_specs) {
    const StepSetSpec spec = parse_step_set(spec_text);
    for (unsigned m : caps) {
      const Cap cap = cap_from(m);
      for (std::uint64_t n = 0; n <= 30; ++n) {
        ++cells;
        if (count_partitions(CountQuery{spec, cap, n}) !=
            oracle::count_partitions(spec, cap, n)) {
          out.fail(std::string("partitions diverge at ") + spec_text + ", cap " +
                   to_string(cap) + ", n=" + std::to_string(n));
          if (out.detail.size() > 200) return out;
        }
      }
    }
  }
  const char* composition_specs[] = {"all", "even", "odd", "{1,2}", "2.."};
  const unsigned composition_caps[] = {1, 2, 0};
  for (const char* spec_text : composition_specs) {
    const StepSetSpec spec = parse_step_set(spec_text);
    for (unsigned m : composition_caps) {
      const Cap cap = cap_from(m);
      for (std::uint64_t n = 0; n <= 14; ++n) {
        ++cells;
        if (count_compositions(spec, cap, n) != oracle::count_compositions(spec, cap, n)) {
          out.fail(std::string("compositions diverge at ") + spec_text + ", cap " +
                   to_string(cap) + ", n=" + std::to_string(n));
          if (out.detail.size() > 200) return out;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) out.fail("took " + fmt_seconds(elapsed) + " (budget 120 s)");
  if (out.pass)
    out.detail = std::to_string(cells) + " grid cells, " + fmt_seconds(elapsed);
  return out;
}

// --- criterion 5: odd parts vs distinct parts ---------------------------------

Outcome euler_identity() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  const auto odd_series = partition_series(StepSetSpec::odd(), Cap::unbounded(), 200);
  const auto distinct_series = partition_series(StepSetSpec::all(), Cap::finite(1), 200);
  for (std::size_t n = 0; n <= 200; ++n)
    if (odd_series.coeff(n) != distinct_series.coeff(n)) {
      out.fail("differs at n=" + std::to_string(n));
      break;
    }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) out.fail("took " + fmt_seconds(elapsed) + " (budget 5 s)");
  if (out.pass) out.detail = "n <= 200 exact, " + fmt_seconds(elapsed);
  return out;
}

// --- criterion 6: composition anchors ------------------------------------------

Outcome composition_anchor() {
  Outcome out;
  if (count_compositions(StepSetSpec::all(), Cap::unbounded(), 3) != 4)
    out.fail("n=3 is not 4");
  mpz_class power = 1;  // 2^(n-1)
  for (std::uint64_t n = 1; n <= 20; ++n) {
    if (count_compositions(StepSetSpec::all(), Cap::unbounded(), n) != power)
      out.fail("2^(n-1) fails at n=" + std::to_string(n));
    if (n <= 12 &&
        count_compositions(StepSetSpec::all(), Cap::unbounded(), n) !=
            oracle::count_compositions(StepSetSpec::all(), Cap::unbounded(), n))
      out.fail("oracle disagrees at n=" + std::to_string(n));
    power *= 2;
  }
  if (out.pass) out.detail = "4 at n=3; 2^(n-1) for n <= 20, oracle-confirmed to 12";
  return out;
}

// --- criterion 7: OEIS b-file verification --------------------------------------

Outcome oeis_verification() {
  Outcome out;
  int pinned_ok = 0;
  for (const testutil::SequenceBinding& binding : testutil::kPinnedSequences) {
    const fs::path path = fs::path(g_data_dir) / "bfiles" / binding.bfile_name;
    try {
      const BFile bfile = load_bfile(path);
      if (bfile.entries.size() < 6) {
        out.fail(std::string(binding.oeis_id) + " prefix shorter than 6 terms");
        continue;
      }
      const auto report =
          verify(parse_step_set(binding.steps), testutil::cap_of(binding), bfile,
                 static_cast<std::uint64_t>(bfile.entries.back().index));
      if (report.ok() && report.checked == bfile.entries.size())
        ++pinned_ok;
      else
        out.fail(std::string(binding.oeis_id) + " has " +
                 std::to_string(report.mismatches.size()) + " mismatches");
    } catch (const std::exception& e) {
      out.fail(std::string(binding.oeis_id) + ": " + e.what());
    }
  }

  // Full b-files are a user-supplied enrichment; verify to 500 when present.
  fs::path full_dir = fs::path(g_data_dir) / "oeis-full";
  if (const char* env = std::getenv("STAIRCOUNT_BFILE_DIR")) full_dir = env;
  int full_ok = 0;
  for (const testutil::SequenceBinding& binding : testutil::kPinnedSequences) {
    const fs::path path = full_dir / binding.bfile_name;
    if (!fs::exists(path)) continue;
    try {
      const BFile bfile = load_bfile(path);
      if (bfile.entries.empty() || bfile.entries.back().index < 500) continue;
      const auto start = std::chrono::steady_clock::now();
      const auto report =
          verify(parse_step_set(binding.steps), testutil::cap_of(binding), bfile, 500);
      const double elapsed = seconds_since(start);
      if (!report.ok())
        out.fail(std::string(binding.oeis_id) + " full file has mismatches");
      else if (elapsed >= 10.0)
        out.fail(std::string(binding.oeis_id) + " took " + fmt_seconds(elapsed));
      else
        ++full_ok;
    } catch (const std::exception& e) {
      out.fail(std::string(binding.oeis_id) + ": " + e.what());
    }
  }
  std::ostringstream detail;
  detail << pinned_ok << "/10 pinned prefixes clean; full b-files: ";
  if (full_ok > 0)
    detail << full_ok << " verified to n=500";
  else
    detail << "none supplied (checked " << full_dir.string() << ")";
  if (out.pass) out.detail = detail.str();
  return out;
}

// --- criterion 8: desk-scale performance and a 40+ digit coefficient -----------

Outcome performance_sanity() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto series = partition_series(StepSetSpec::all(), Cap::unbounded(), 2000);
  const double elapsed = seconds_since(start);
  const mpz_class& value = series.coeff(2000);
  const std::string digits = value.get_str();
  if (elapsed >= 10.0) out.fail("took " + fmt_seconds(elapsed) + " (budget 10 s)");
  if (value <= 0) out.fail("coefficient not positive");
  if (digits.size() <= 40)
    out.fail("only " + std::to_string(digits.size()) + " digits");

  // Independent route: the pentagonal-number recurrence.
  const auto reference = testutil::pentagonal_partition_numbers(2000);
  for (std::size_t n = 0; n <= 2000; n += (n < 50 ? 1 : 97))
    if (series.coeff(n) != reference[n]) {
      out.fail("pentagonal recurrence disagrees at n=" + std::to_string(n));
      break;
    }
  if (series.coeff(2000) != reference[2000]) out.fail("pentagonal recurrence disagrees at 2000");

  // And the user-supplied b-file, when present.
  fs::path full_dir = fs::path(g_data_dir) / "oeis-full";
  if (const char* env = std::getenv("STAIRCOUNT_BFILE_DIR")) full_dir = env;
  std::string bfile_note = "no full A000041 b-file supplied";
  const fs::path path = full_dir / "b000041.txt";
  if (fs::exists(path)) {
    try {
      const BFile bfile = load_bfile(path);
      bool found = false;
      for (const BFileEntry& e : bfile.entries)
        if (e.index == 2000) {
          found = true;
          if (e.value != value) out.fail("b-file value at 2000 differs");
        }
      bfile_note = found ? "matches the supplied b000041.txt entry"
                         : "supplied b000041.txt lacks index 2000";
    } catch (const std::exception& e) {
      out.fail(std::string("b000041.txt: ") + e.what());
    }
  }
  if (out.pass)
    out.detail = "order 2000 in " + fmt_seconds(elapsed) + ", " +
                 std::to_string(digits.size()) +
                 " digits, pentagonal recurrence agrees; " + bfile_note;
  return out;
}

// --- criterion 9: parser robustness ---------------------------------------------

Outcome parser_robustness() {
  Outcome out;
  const std::pair<const char*, const char*> positive[] = {
      {"all", "all"},          {"ALL", "all"},
      {"  Even  ", "even"},    {"odd", "odd"},
      {"Primes", "primes"},    {"fibonacci", "fibonacci"},
      {"2..", "2.."},          {" 3 .. 7 ", "3..7"},
      {"1..1", "1..1"},        {"{1,2}", "{1,2}"},
      {"{ 3 , 1 , 3 }", "{1,3}"}, {"{07}", "{7}"},
      {"odd|{2}", "odd|{2}"},  {"even | odd | 10..12", "even|odd|10..12"},
      {"fibonacci|primes", "fibonacci|primes"}, {"{1}|2..4|even", "{1}|2..4|even"},
  };
  int positives = 0;
  for (const auto& [text, canonical] : positive) {
    try {
      if (format_step_set(parse_step_set(text)) == canonical)
        ++positives;
      else
        out.fail(std::string("'") + text + "' canonicalizes wrongly");
    } catch (const std::exception& e) {
      out.fail(std::string("'") + text + "' rejected: " + e.what());
    }
  }

  const std::pair<const char*, std::size_t> negative[] = {
      {"", 0},       {"foo", 0},   {"evenx", 0},   {"0", 0},        {"{0}", 1},
      {"{}", 1},     {"7..3", 3},  {"{1,,2}", 3},  {"{1,2", 4},     {"{1 2}", 3},
      {"odd|", 4},   {"|odd", 0},  {"odd extra", 4}, {"3", 1},      {"2. .3", 1},
      {"-3", 0},     {"..5", 0},   {"99999999999999999999", 0},     {"{1,2}}", 5},
      {"all|{}", 5},
  };
  int negatives = 0;
  for (const auto& [text, max_pos] : negative) {
    try {
      (void)parse_step_set(text);
      out.fail(std::string("'") + text + "' accepted");
    } catch (const ParseError& e) {
      if (e.position() <= max_pos && e.position() <= std::string(text).size())
        ++negatives;
      else
        out.fail(std::string("'") + text + "' reported offset " +
                 std::to_string(e.position()));
    }
  }

  std::mt19937 rng(97);
  std::uniform_int_distribution<int> length(0, 32);
  std::uniform_int_distribution<int> raw(0, 255);
  const std::string alphabet = "aelv dnoprimsfbc0123456789{},.|  \t";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> mode(0, 3);
  int fuzz_runs = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string input;
    for (int i = length(rng); i > 0; --i)
      input.push_back(mode(rng) == 0 ? static_cast<char>(raw(rng))
                                     : alphabet[pick(rng)]);
    try {
      (void)parse_step_set(input).enumerate_upto(16);
    } catch (const ParseError&) {
      // rejection is fine; anything else would escape and fail the criterion
    }
    ++fuzz_runs;
  }
  if (out.pass)
    out.detail = std::to_string(positives) + " positive, " + std::to_string(negatives) +
                 " negative, " + std::to_string(fuzz_runs) + " fuzz inputs, 0 crashes";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data_dir = argv[1];

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {1, "paper series reproduction", printed_series_reproduction},
      {2, "singleton step-set structure", singleton_structure},
      {3, "bounded-range leading behavior", range_leading_behavior},
      {4, "oracle grid", oracle_grid},
      {5, "odd-vs-distinct identity", euler_identity},
      {6, "composition anchor", composition_anchor},
      {7, "OEIS b-file verification", oeis_verification},
      {8, "performance sanity", performance_sanity},
      {9, "parser robustness", parser_robustness},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("unexpected exception: ") + e.what();
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id
              << ": " << criterion.name
              << (outcome.detail.empty() ? "" : " — " + outcome.detail) << "\n";
  }
  if (failed > 0) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
