#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isq/verify.hpp"
#include "json.hpp"

namespace isq {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int k_report_schema = 1;

// One evaluated cell of a run.
struct CellResult {
  std::string id; // zero-padded position in the run, e.g. "007"
  VerificationReport report;
  Verdict expected = Verdict::pass;
  bool ok() const { return report.verdict == expected; }
};

// Per-cell JSON; the runtime is kept out so identical runs differ only in the timestamp.
nlohmann::ordered_json to_json(const CellResult &cell, const std::string &timestamp);

// RFC 4180 field quoting.
std::string csv_field(const std::string &s);
std::string csv_number(double v); // empty for NaN

// Aggregate table, one row per cell, CRLF line endings.
std::string aggregate_csv(std::span<const CellResult> cells);

// Writes <dir>/<id>-<check>-<kind>.csv for every cell whose plot has this kind and returns the
// file names. Throws std::invalid_argument when no cell carries such a plot, IoError on write
// failure.
std::vector<std::string> export_plotdata(std::span<const CellResult> cells, const std::string &kind,
                                         const std::filesystem::path &dir);

// Writes the JSON reports, summary.csv and every plot table.
void write_run(std::span<const CellResult> cells, const std::filesystem::path &dir,
               const std::string &timestamp);

std::string utc_timestamp();

} // namespace isq
