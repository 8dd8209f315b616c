#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isq/report.hpp"
#include "isq/verify.hpp"

namespace isq {

enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_config = 2, exit_io = 3 };

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string mode; // "verify" or "sweep"
  std::vector<std::string> checks;
  std::optional<int> d;
  std::optional<std::string> a; // number or "endpoint"
  std::optional<double> s, p;
  std::optional<int> grid_n;
  std::optional<double> r_min, r_max;
  std::optional<int> l_max;
  std::optional<int> n_min, n_max; // dyadic exponents
  std::optional<double> tol;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string out = "isq-out";
};

const std::vector<std::string> &verify_checks();
const std::vector<std::string> &sweep_checks();

// Strict key=value file with [run], [params] and [grid] sections. Command-line flags are applied
// afterwards and override it.
void apply_config_file(RunConfig &cfg, const std::string &path);
void apply_config_text(RunConfig &cfg, const std::string &text);
void validate(const RunConfig &cfg); // throws ConfigError

struct Cell {
  std::string check;
  Verdict expected = Verdict::pass;
  std::function<VerificationReport()> run;
};
std::vector<Cell> build_cells(const RunConfig &cfg);

// Runs cells on `jobs` threads; results keep the cell order.
std::vector<CellResult> run_cells(const std::vector<Cell> &cells, int jobs);

// Full pipeline; returns an ExitCode.
int run(const RunConfig &cfg, std::ostream &log);
int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace isq
