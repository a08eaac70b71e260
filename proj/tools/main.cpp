// Command-line front end: every query the library answers, as batch
// subcommands.  Exit codes: 0 success (and verify/xcheck agreement),
// 1 mismatch found, 2 usage or parse error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <staircount/dsl.hpp>
#include <staircount/engine.hpp>
#include <staircount/oeis.hpp>
#include <staircount/oracle.hpp>

namespace {

using namespace staircount;

struct StepOptions {
  std::string steps_text;
  std::uint64_t max_mult = 0;
  CLI::Option* max_mult_opt = nullptr;

  StepSetSpec spec() const { return parse_step_set(steps_text); }

  Cap cap() const {
    return max_mult_opt->count() > 0 ? Cap::finite(max_mult) : Cap::unbounded();
  }
};

void add_step_options(CLI::App& cmd, StepOptions& opts) {
  cmd.add_option("--steps", opts.steps_text,
                 "step-set expression, e.g. all, odd, primes, {1,2}, 2.., 3..7, even|{1}")
      ->required();
  opts.max_mult_opt =
      cmd.add_option("--max-mult", opts.max_mult, "maximum multiplicity of each step size");
  CLI::Option* unbounded =
      cmd.add_flag("--unbounded", "no multiplicity bound (the default)");
  opts.max_mult_opt->excludes(unbounded);
  unbounded->excludes(opts.max_mult_opt);
}

std::string render_partition(const Partition& p) {
  if (p.parts.empty()) return "0";  // the empty climb
  std::string out;
  for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(it->first);
    if (it->second > 1) out += "^" + std::to_string(it->second);
  }
  return out;
}

std::filesystem::path resolve_bfile(const std::string& given) {
  namespace fs = std::filesystem;
  fs::path path(given);
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("STAIRCOUNT_BFILE_DIR")) {
    const fs::path fallback = fs::path(dir) / path;
    if (fs::exists(fallback)) return fallback;
  }
  return path;  // load_bfile reports the failure
}

int run_count(const StepOptions& opts, std::uint64_t n) {
  std::cout << count_partitions(CountQuery{opts.spec(), opts.cap(), n}).get_str() << "\n";
  return 0;
}

int run_series(const StepOptions& opts, std::uint64_t order, bool machine) {
  const TruncatedSeries series =
      partition_series(opts.spec(), opts.cap(), static_cast<std::size_t>(order));
  if (machine) {
    for (const mpz_class& c : series.coeffs()) std::cout << c.get_str() << "\n";
    return 0;
  }
  const int width = static_cast<int>(std::to_string(order).size());
  for (std::size_t i = 0; i < series.coeffs().size(); ++i)
    std::cout << std::setw(width) << i << "  " << series.coeff(i).get_str() << "\n";
  return 0;
}

int run_list(const StepOptions& opts, std::uint64_t n, std::uint64_t limit, bool machine) {
  const auto partitions = enumerate_partitions(CountQuery{opts.spec(), opts.cap(), n}, limit);
  for (const Partition& p : partitions) std::cout << render_partition(p) << "\n";
  if (!machine) std::cerr << "count: " << partitions.size() << "\n";
  return 0;
}

int run_compose(const StepOptions& opts, std::uint64_t n, std::uint64_t limit) {
  std::cout << count_compositions(opts.spec(), opts.cap(), n, limit).get_str() << "\n";
  return 0;
}

int run_verify(const StepOptions& opts, const std::string& bfile_path, std::uint64_t upto,
               long long shift, bool machine) {
  const BFile bfile = load_bfile(resolve_bfile(bfile_path));
  const VerificationReport report = verify(opts.spec(), opts.cap(), bfile, upto, shift);
  if (machine) {
    for (const Mismatch& m : report.mismatches)
      std::cout << m.index << " " << m.expected.get_str() << " " << m.computed.get_str()
                << "\n";
  } else {
    std::cout << report.source_name << ": checked " << report.checked << " indices";
    if (report.checked > 0)
      std::cout << " in [" << report.first_index << ", " << report.last_index << "]";
    std::cout << ", " << report.mismatches.size() << " mismatches, " << report.skipped
              << " entries outside range\n";
    for (const Mismatch& m : report.mismatches)
      std::cout << "  index " << m.index << ": expected " << m.expected.get_str()
                << ", computed " << m.computed.get_str() << "\n";
  }
  return report.ok() ? 0 : 1;
}

// The ten applications, one row per generating function; max_mult 0 means
// unbounded, oeis "-" where no sequence is cited.
struct AzarianRow {
  const char* tag;
  const char* question;
  const char* steps;
  unsigned max_mult;
  const char* oeis;
};

constexpr AzarianRow kAzarianRows[] = {
    {"Q1-even", "distinct even step sizes", "even", 1, "A000009"},
    {"Q1-odd", "distinct odd step sizes", "odd", 1, "A000700"},
    {"Q2", "step size k taken at most k times (k=3)", "{3}", 3, "-"},
    {"Q3", "at least two stairs at a time", "2..", 0, "A002865"},
    {"Q4", "at most two stairs at a time", "{1,2}", 0, "A008619"},
    {"Q5-even", "even step sizes", "even", 0, "A000041"},
    {"Q5-odd", "odd step sizes", "odd", 0, "A000009"},
    {"Q6", "every step size at most twice", "all", 2, "A000726"},
    {"Q7", "step size k only (k=3)", "{3}", 0, "-"},
    {"Q8", "prime step sizes", "primes", 0, "A000607"},
    {"Q8-distinct", "distinct prime step sizes", "primes", 1, "A000586"},
    {"Q9", "Fibonacci step sizes", "fibonacci", 0, "A003107"},
    {"Q9-distinct", "distinct Fibonacci step sizes", "fibonacci", 1, "A000119"},
    {"Q10", "step sizes between a and b (a=2, b=5)", "2..5", 0, "-"},
};

int run_azarian(std::uint64_t upto, bool machine) {
  for (const AzarianRow& row : kAzarianRows) {
    const Cap cap = row.max_mult == 0 ? Cap::unbounded() : Cap::finite(row.max_mult);
    const TruncatedSeries series =
        partition_series(parse_step_set(row.steps), cap, static_cast<std::size_t>(upto));
    std::string coeffs;
    for (const mpz_class& c : series.coeffs()) {
      if (!coeffs.empty()) coeffs += " ";
      coeffs += c.get_str();
    }
    if (machine) {
      std::cout << row.tag << "\t" << row.steps << "\t" << to_string(cap) << "\t"
                << row.oeis << "\t" << coeffs << "\n";
    } else {
      std::cout << std::left << std::setw(12) << row.tag << std::setw(40) << row.question
                << std::setw(11) << row.steps << std::setw(11) << to_string(cap)
                << std::setw(9) << row.oeis << coeffs << "\n";
    }
  }
  return 0;
}

int run_xcheck(const StepOptions& opts, std::uint64_t upto, bool compositions,
               bool machine) {
  const StepSetSpec spec = opts.spec();
  const Cap cap = opts.cap();
  std::size_t mismatches = 0;
  for (std::uint64_t n = 0; n <= upto; ++n) {
    const mpz_class engine = compositions
                                 ? count_compositions(spec, cap, n)
                                 : count_partitions(CountQuery{spec, cap, n});
    const std::uint64_t reference = compositions
                                        ? oracle::count_compositions(spec, cap, n)
                                        : oracle::count_partitions(spec, cap, n);
    if (engine != reference) {
      ++mismatches;
      if (machine)
        std::cout << n << " " << engine.get_str() << " " << reference << "\n";
      else
        std::cout << "n = " << n << ": engine " << engine.get_str() << ", oracle "
                  << reference << "\n";
    }
  }
  if (!machine) {
    if (mismatches == 0)
      std::cout << "engine and oracle agree for n = 0.." << upto << "\n";
    else
      std::cout << mismatches << " mismatches for n = 0.." << upto << "\n";
  }
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact staircase-climb counting: partitions and compositions with "
               "bounded step multiplicities"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine,
               "payload-only output on stdout; diagnostics go to stderr");

  int exit_code = 0;

  StepOptions count_opts;
  std::uint64_t count_n = 0;
  CLI::App* count_cmd = app.add_subcommand("count", "number of capped partitions of N");
  count_cmd->fallthrough();
  add_step_options(*count_cmd, count_opts);
  count_cmd->add_option("-n", count_n, "number of stairs")->required();
  count_cmd->callback([&] { exit_code = run_count(count_opts, count_n); });

  StepOptions series_opts;
  std::uint64_t series_order = 0;
  CLI::App* series_cmd =
      app.add_subcommand("series", "counting-series coefficients 0..ORDER");
  series_cmd->fallthrough();
  add_step_options(*series_cmd, series_opts);
  series_cmd->add_option("--order", series_order, "truncation order")->required();
  series_cmd->callback(
      [&] { exit_code = run_series(series_opts, series_order, machine); });

  StepOptions list_opts;
  std::uint64_t list_n = 0;
  std::uint64_t list_limit = kDefaultEnumerationLimit;
  CLI::App* list_cmd = app.add_subcommand("list", "every capped partition of N");
  list_cmd->fallthrough();
  add_step_options(*list_cmd, list_opts);
  list_cmd->add_option("-n", list_n, "number of stairs")->required();
  list_cmd->add_option("--limit", list_limit, "enumeration limit for N");
  list_cmd->callback([&] { exit_code = run_list(list_opts, list_n, list_limit, machine); });

  StepOptions compose_opts;
  std::uint64_t compose_n = 0;
  std::uint64_t compose_limit = kDefaultEnumerationLimit;
  CLI::App* compose_cmd =
      app.add_subcommand("compose", "number of order-sensitive climbs of N");
  compose_cmd->fallthrough();
  add_step_options(*compose_cmd, compose_opts);
  compose_cmd->add_option("-n", compose_n, "number of stairs")->required();
  compose_cmd->add_option("--limit", compose_limit,
                          "enumeration limit for the capped path");
  compose_cmd->callback(
      [&] { exit_code = run_compose(compose_opts, compose_n, compose_limit); });

  StepOptions verify_opts;
  std::string verify_bfile;
  std::uint64_t verify_upto = 0;
  long long verify_shift = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "compare coefficients against an OEIS b-file");
  verify_cmd->fallthrough();
  add_step_options(*verify_cmd, verify_opts);
  verify_cmd
      ->add_option("--bfile", verify_bfile,
                   "b-file path (relative paths also resolve under $STAIRCOUNT_BFILE_DIR)")
      ->required();
  verify_cmd->add_option("--upto", verify_upto, "last index to compare")->required();
  verify_cmd->add_option("--shift", verify_shift,
                         "added to b-file indices, for nonzero sequence offsets");
  verify_cmd->callback([&] {
    exit_code = run_verify(verify_opts, verify_bfile, verify_upto, verify_shift, machine);
  });

  std::uint64_t azarian_upto = 5;
  CLI::App* azarian_cmd = app.add_subcommand(
      "azarian", "series prefixes for the ten classic staircase questions");
  azarian_cmd->fallthrough();
  azarian_cmd->add_option("--upto", azarian_upto, "truncation order (default 5)");
  azarian_cmd->callback([&] { exit_code = run_azarian(azarian_upto, machine); });

  StepOptions xcheck_opts;
  std::uint64_t xcheck_upto = 0;
  bool xcheck_compositions = false;
  CLI::App* xcheck_cmd =
      app.add_subcommand("xcheck", "engine vs brute-force oracle for n = 0..UPTO");
  xcheck_cmd->fallthrough();
  add_step_options(*xcheck_cmd, xcheck_opts);
  xcheck_cmd->add_option("--upto", xcheck_upto, "last n to compare")->required();
  xcheck_cmd->add_flag("--compositions", xcheck_compositions,
                       "compare composition counts instead of partition counts");
  xcheck_cmd->callback([&] {
    exit_code = run_xcheck(xcheck_opts, xcheck_upto, xcheck_compositions, machine);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const staircount::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
