#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "prasymp/asymptotics.hpp"
#include "prasymp/recurrence.hpp"

namespace prasymp {

// Auto picks the 256-bit recurrence for n <= 400 and the native scaled
// recurrence above (rational is exact but too slow past n ~ 200).
enum class OracleMode { Auto, Native, HighPrec, Rational };

std::string to_string(OracleMode m);

struct SweepConfig {
  RecurrenceParams params{0.0, 0.0, 0.0};
  std::vector<int> n_list;
  std::vector<Complex> grid;  // scaled points in the case coordinate
  OracleMode mode = OracleMode::Auto;
  int bits = 256;
  double delta = 0.1;
  std::string out;            // empty: stdout only
  std::string format = "csv";
  bool reflected = false;     // d < 0 was normalized away at parse time
};

// Rejects empty/descending n_list and grid points that fall in an excluded
// turning-point neighborhood at any configured n.
void validate_config(const SweepConfig& cfg);

struct ErrorRow {
  int n = 0;
  Complex point{};
  Region region;
  double rel_error = 0.0;
  double log_gap = 0.0;  // log|Phi+| - log|Phi-|, 0 when single-branch
  std::string note;      // oracle failure text; empty on success
};

struct ErrorReport {
  SweepConfig config;
  std::vector<ErrorRow> rows;  // n-major, grid order within each n
  struct RegionSummary {
    Region::Kind kind{};
    std::vector<double> max_err;  // aligned with config.n_list
  };
  std::vector<RegionSummary> summary;
  std::vector<int> violations;  // grid indices whose error fails to decrease
};

ErrorReport compare_sweep(const SweepConfig& cfg);

void write_report_csv(const ErrorReport& rep, std::ostream& os);
void write_report_json(const ErrorReport& rep, std::ostream& os);

// Figure-1 data drop: curve.csv, segment.csv, zeros.csv, overlay.json.
void emit_figure_data(const RecurrenceParams& p, int n, const std::string& out_dir);

// Cross-module smoke invariants; prints one line per check, returns all-pass.
bool selftest(std::ostream& os);

int cli_main(int argc, char** argv);

}  // namespace prasymp
