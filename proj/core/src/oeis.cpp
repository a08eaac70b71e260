#include "staircount/oeis.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "staircount/engine.hpp"

namespace staircount {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view t) {
  if (!t.empty() && t.front() == '-') t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

BFileError::BFileError(const std::string& source_name, std::size_t line,
                       const std::string& message)
    : std::runtime_error(source_name + ":" + std::to_string(line) + ": " + message),
      line_(line) {}

BFile parse_bfile(std::string_view text, std::string source_name) {
  BFile bfile;
  bfile.source_name = std::move(source_name);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_prev = false;
  long long prev_index = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2 || !is_integer_token(fields[0]) || !is_integer_token(fields[1]))
      throw BFileError(bfile.source_name, line_no,
                       "malformed line: expected \"index value\"");
    long long index = 0;
    const auto [ptr, ec] =
        std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), index);
    if (ec != std::errc() || ptr != fields[0].data() + fields[0].size())
      throw BFileError(bfile.source_name, line_no, "index out of range");
    if (have_prev && index <= prev_index)
      throw BFileError(bfile.source_name, line_no,
                       "index " + std::to_string(index) + " does not increase");
    prev_index = index;
    have_prev = true;
    bfile.entries.push_back(BFileEntry{index, mpz_class(std::string(fields[1]), 10)});
  }
  return bfile;
}

BFile load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open b-file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bfile(buffer.str(), path.filename().string());
}

VerificationReport verify(const StepSetSpec& steps, const Cap& cap,
                          const BFile& bfile, std::uint64_t upto,
                          long long shift) {
  VerificationReport report;
  report.source_name = bfile.source_name;
  const TruncatedSeries series =
      partition_series(steps, cap, static_cast<std::size_t>(upto));
  for (const BFileEntry& entry : bfile.entries) {
    const long long index = entry.index + shift;
    if (index < 0 || static_cast<unsigned long long>(index) > upto) {
      ++report.skipped;
      continue;
    }
    if (report.checked == 0) report.first_index = index;
    report.last_index = index;
    ++report.checked;
    const mpz_class& computed = series.coeff(static_cast<std::size_t>(index));
    if (computed != entry.value)
      report.mismatches.push_back(Mismatch{index, entry.value, computed});
  }
  return report;
}

}  // namespace staircount
