#pragma once

/**
 * @file app.hpp
 * @brief Command-line front end: configuration, grid evaluation and output.
 *
 * Every data command produces a Table, written as CSV (a '#' comment block,
 * a column header row, then rows at 17 significant digits) or as JSON
 * ({config, columns, data}). Heat maps are row-major with the first axis
 * outermost; the axis vectors are emitted alongside.
 */

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace covosc::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitVerifyFailed = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Wavefunction, Density, EntropyCurve, WignerGrid, Schmidt, Verify };
enum class Format { Csv, Json };
enum class ToleranceProfile { Default, Strict };

std::string to_string(Command c);
std::string to_string(Format f);
std::string to_string(ToleranceProfile p);

/// `start:stop:step`, endpoints inclusive within half a step; a bare number is
/// a single value.
struct EtaRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  std::string text = "0";

  std::vector<double> values() const;
  bool is_single() const { return step == 0.0; }
};

/// `min:max:points`, points >= 2.
struct GridSpec {
  double min = -4.0;
  double max = 4.0;
  std::size_t points = 81;
  std::string text = "-4:4:81";

  std::vector<double> axis() const;
};

EtaRange parse_eta_range(const std::string& text);
GridSpec parse_grid(const std::string& text);

struct RunConfig {
  Command command = Command::Verify;
  EtaRange eta;
  std::optional<int> n;
  GridSpec grid;
  std::string out;  // empty: stdout
  Format format = Format::Csv;
  int quad_order = 68;
  double fd_step = 1e-3;
  ToleranceProfile profile = ToleranceProfile::Default;

  /// Throws UsageError on inconsistent settings.
  void validate() const;
  /// Ordered key/value pairs recorded in every output header.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

struct Axis {
  std::string name;
  std::vector<double> values;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Present for heat-map grids.
  std::vector<Axis> axes;
};

/// Parses argv. Throws UsageError (help and version requests included, with the text
/// as the message, flagged by `help_requested`).
RunConfig parse_args(int argc, const char* const* argv, bool* help_requested = nullptr);

/// Evaluates a data command (everything but verify).
Table evaluate(const RunConfig& config);

/// `timestamp` fills the single "generated" header line; pass a fixed string for
/// reproducible output.
void write_csv(std::ostream& os, const Table& table, const RunConfig& config,
               const std::string& timestamp);
void write_json(std::ostream& os, const Table& table, const RunConfig& config,
                const std::string& timestamp);

/// Runs the configured command, writing to config.out (or `out` when empty) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map exceptions to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace covosc::cli
