#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "staircount/cap.hpp"
#include "staircount/step_set.hpp"

namespace staircount {

struct BFileEntry {
  long long index;
  mpz_class value;
};

// Parsed OEIS b-file: one "index value" pair per line, '#' comment lines and
// blank lines skipped, indices strictly increasing.
struct BFile {
  std::string source_name;
  std::vector<BFileEntry> entries;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(const std::string& source_name, std::size_t line,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }  // 1-based

 private:
  std::size_t line_;
};

BFile parse_bfile(std::string_view text, std::string source_name);

// Reads the file and parses it; source_name is the file name.
BFile load_bfile(const std::filesystem::path& path);

struct Mismatch {
  long long index;
  mpz_class expected;  // b-file value
  mpz_class computed;  // series coefficient
};

struct VerificationReport {
  std::string source_name;
  std::size_t checked = 0;   // number of compared indices
  std::size_t skipped = 0;   // b-file entries outside [0, upto]
  long long first_index = 0; // compared range; meaningful when checked > 0
  long long last_index = -1;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

// Computes the partition series once at order `upto` and compares its
// coefficients against every b-file entry whose index lands in [0, upto].
// Entries outside that window are skipped and counted separately; mismatches
// are data, not errors.  `shift` is added to each b-file index before
// comparison, for sequences whose offset is not zero.
VerificationReport verify(const StepSetSpec& steps, const Cap& cap,
                          const BFile& bfile, std::uint64_t upto,
                          long long shift = 0);

}  // namespace staircount
