#include "covosc/cli/app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "covosc/cli/verification.hpp"
#include "covosc/covariant_oscillator.hpp"
#include "covosc/density_matrix.hpp"
#include "covosc/squeezed_states.hpp"
#include "covosc/wigner.hpp"

namespace covosc::cli {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + s + "' in " + what);
  }
}

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (!s.empty() && s.back() == ':') parts.emplace_back();
  return parts;
}

Rapidity single_eta(const RunConfig& c) {
  if (!c.eta.is_single()) {
    throw UsageError(to_string(c.command) + " takes a single --eta value, not a range");
  }
  return Rapidity(c.eta.start);
}

Table grid_table(const RunConfig& c, const std::string& a, const std::string& b,
                 std::vector<std::string> value_columns,
                 const std::function<std::vector<double>(double, double)>& cell) {
  Table t;
  t.columns = {a, b};
  t.columns.insert(t.columns.end(), value_columns.begin(), value_columns.end());
  const std::vector<double> axis = c.grid.axis();
  t.axes = {{a, axis}, {b, axis}};
  t.rows.reserve(axis.size() * axis.size());
  for (double x : axis) {
    for (double y : axis) {
      std::vector<double> row{x, y};
      const std::vector<double> values = cell(x, y);
      row.insert(row.end(), values.begin(), values.end());
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Wavefunction:
      return "wavefunction";
    case Command::Density:
      return "density";
    case Command::EntropyCurve:
      return "entropy-curve";
    case Command::WignerGrid:
      return "wigner-grid";
    case Command::Schmidt:
      return "schmidt";
    case Command::Verify:
      return "verify";
  }
  return "unknown";
}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

std::string to_string(ToleranceProfile p) {
  return p == ToleranceProfile::Default ? "default" : "strict";
}

std::vector<double> EtaRange::values() const {
  if (is_single()) return {start};
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = start + step * static_cast<double>(i);
  return v;
}

std::vector<double> GridSpec::axis() const {
  std::vector<double> v(points);
  const double h = (max - min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) v[i] = min + h * static_cast<double>(i);
  v.back() = max;
  return v;
}

EtaRange parse_eta_range(const std::string& text) {
  const std::vector<std::string> parts = split_colon(text);
  EtaRange r;
  r.text = text;
  if (parts.size() == 1) {
    r.start = r.stop = parse_number(parts[0], "--eta");
    r.step = 0.0;
    return r;
  }
  if (parts.size() != 3) throw UsageError("--eta expects a value or start:stop:step");
  r.start = parse_number(parts[0], "--eta");
  r.stop = parse_number(parts[1], "--eta");
  r.step = parse_number(parts[2], "--eta");
  if (!(r.step > 0.0)) throw UsageError("--eta step must be positive");
  if (r.stop < r.start - 0.5 * r.step) throw UsageError("--eta range is empty");
  return r;
}

GridSpec parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split_colon(text);
  if (parts.size() != 3) throw UsageError("--grid expects min:max:points");
  GridSpec g;
  g.text = text;
  g.min = parse_number(parts[0], "--grid");
  g.max = parse_number(parts[1], "--grid");
  const double pts = parse_number(parts[2], "--grid");
  if (pts < 2 || pts != std::floor(pts) || pts > 1e5) {
    throw UsageError("--grid needs an integer number of points >= 2");
  }
  g.points = static_cast<std::size_t>(pts);
  if (!(g.max > g.min)) throw UsageError("--grid needs max > min");
  return g;
}

void RunConfig::validate() const {
  for (double e : eta.values()) {
    if (!(std::abs(e) <= Rapidity::kMaxMagnitude)) {
      throw UsageError("--eta values must satisfy |eta| <= 20");
    }
  }
  if (n && *n < 0) throw UsageError("--n must be nonnegative");
  if (quad_order < 2 || quad_order > kMaxGaussOrder) {
    throw UsageError("--quad-order must be in [2, " + std::to_string(kMaxGaussOrder) + "]");
  }
  if (!(fd_step > 0.0) || fd_step > 0.1) throw UsageError("--fd-step must be in (0, 0.1]");
}

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const {
  return {
      {"command", to_string(command)},
      {"eta", eta.text},
      {"n", n ? std::to_string(*n) : std::string("default")},
      {"grid", grid.text},
      {"format", to_string(format)},
      {"quad-order", std::to_string(quad_order)},
      {"fd-step", format_double(fd_step)},
      {"tolerance-profile", to_string(profile)},
  };
}

RunConfig parse_args(int argc, const char* const* argv, bool* help_requested) {
  if (help_requested) *help_requested = false;
  CLI::App app{"Covariant oscillator toolkit: boosted wavefunctions, squeezed states, "
               "reduced density, entropy and Wigner grids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("covosc ") + kVersion);

  std::string eta_text = "0";
  std::string grid_text = "-4:4:81";
  int n_value = -1;
  RunConfig config;
  std::string format_text = "csv";
  std::string profile_text = "default";

  const std::pair<const char*, Command> commands[] = {
      {"wavefunction", Command::Wavefunction}, {"density", Command::Density},
      {"entropy-curve", Command::EntropyCurve}, {"wigner-grid", Command::WignerGrid},
      {"schmidt", Command::Schmidt},           {"verify", Command::Verify},
  };
  const char* descriptions[] = {
      "boosted wavefunction psi(z,t) on a square grid",
      "reduced density kernel rho(z,z') after tracing out t",
      "entropy, purity and phase-space radius versus eta",
      "Wigner distribution W(z,p) on a square grid",
      "Schmidt coefficients and probabilities of the squeezed series",
      "run every oracle-versus-closed-form check",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    sub->fallthrough();
    subs.push_back(sub);
  }

  app.add_option("--eta", eta_text, "rapidity value or start:stop:step");
  app.add_option("--n", n_value, "excitation number (schmidt: truncation order)");
  app.add_option("--grid", grid_text, "min:max:points per axis");
  app.add_option("--out", config.out, "output path (default stdout)");
  app.add_option("--format", format_text, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--quad-order", config.quad_order, "Gauss-Hermite order for verify");
  app.add_option("--fd-step", config.fd_step, "finite-difference step for verify");
  app.add_option("--tolerance-profile", profile_text, "default or strict")
      ->check(CLI::IsMember({"default", "strict"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help_requested) *help_requested = true;
    throw UsageError(app.help());
  } catch (const CLI::CallForVersion& e) {
    if (help_requested) *help_requested = true;
    throw UsageError(std::string(e.what()) + "\n");
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) config.command = commands[i].second;
  }
  config.eta = parse_eta_range(eta_text);
  config.grid = parse_grid(grid_text);
  if (n_value >= 0) {
    config.n = n_value;
  } else if (app.count("--n") > 0) {
    throw UsageError("--n must be nonnegative");
  }
  config.format = format_text == "json" ? Format::Json : Format::Csv;
  config.profile = profile_text == "strict" ? ToleranceProfile::Strict : ToleranceProfile::Default;
  config.validate();
  return config;
}

Table evaluate(const RunConfig& c) {
  switch (c.command) {
    case Command::Wavefunction: {
      const OscillatorState st(c.n.value_or(0), single_eta(c));
      return grid_table(c, "z", "t", {"psi"},
                        [&](double z, double t) { return std::vector{psi_boosted(st, z, t)}; });
    }
    case Command::Density: {
      const Rapidity eta = single_eta(c);
      const QuadratureRule t_rule = boosted_trapezoid(eta.value());
      return grid_table(c, "z", "zp", {"rho_closed", "rho_numeric"}, [&](double z, double zp) {
        return std::vector{reduced_closed({eta}, z, zp), reduced_numeric(eta, z, zp, t_rule)};
      });
    }
    case Command::WignerGrid: {
      const Rapidity eta = single_eta(c);
      const double max_p = std::max(std::abs(c.grid.min), std::abs(c.grid.max));
      const QuadratureRule y_rule = wigner_rule(eta, max_p);
      return grid_table(c, "z", "p", {"wigner", "wigner_numeric"}, [&](double z, double p) {
        return std::vector{wigner_closed(eta, {z, p}), wigner_numeric(eta, {z, p}, y_rule).real};
      });
    }
    case Command::EntropyCurve: {
      Table t;
      t.columns = {"eta", "entropy", "entropy_series", "series_tail", "purity",
                   "phase_space_radius"};
      for (double e : c.eta.values()) {
        const Rapidity eta(e);
        const SeriesEntropy se = entropy_series(eta, default_truncation(eta, 1e-13, 100000));
        t.rows.push_back({e, entropy_closed(eta), se.value, se.tail_bound, 1.0 / eta.cosh2(),
                          phase_space_radius(eta)});
      }
      return t;
    }
    case Command::Schmidt: {
      const Rapidity eta = single_eta(c);
      const int k_max = c.n.value_or(default_truncation(eta));
      const SchmidtExpansion e = expansion(eta, k_max);
      const std::vector<double> p = schmidt_probabilities(eta, k_max);
      Table t;
      t.columns = {"k", "coefficient", "probability", "cumulative"};
      double cumulative = 0.0;
      for (int k = 0; k <= k_max; ++k) {
        cumulative += p[k];
        t.rows.push_back({static_cast<double>(k), e.coeffs[k], p[k], cumulative});
      }
      return t;
    }
    case Command::Verify:
      break;
  }
  throw UsageError("verify produces a report, not a table");
}

void write_csv(std::ostream& os, const Table& table, const RunConfig& config,
               const std::string& timestamp) {
  os << "# covosc " << kVersion << '\n';
  os << "# generated: " << timestamp << '\n';
  for (const auto& [key, value] : config.describe()) os << "# " << key << ": " << value << '\n';
  if (!table.axes.empty()) {
    os << "# layout: row-major, " << table.axes[0].name << " outer, " << table.axes[1].name
       << " inner\n";
    for (const Axis& axis : table.axes) {
      os << "# axis " << axis.name << ':';
      for (std::size_t i = 0; i < axis.values.size(); ++i) {
        os << (i ? "," : " ") << format_double(axis.values[i]);
      }
      os << '\n';
    }
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table, const RunConfig& config,
                const std::string& timestamp) {
  nlohmann::ordered_json j;
  j["config"]["version"] = kVersion;
  j["config"]["generated"] = timestamp;
  for (const auto& [key, value] : config.describe()) j["config"][key] = value;
  j["columns"] = table.columns;
  j["data"] = table.rows;
  if (!table.axes.empty()) {
    j["layout"] = "row-major";
    for (const Axis& axis : table.axes) j["axes"][axis.name] = axis.values;
  }
  os << j.dump(2) << '\n';
}

namespace {

int run_verify(const RunConfig& config, std::ostream& report) {
  const VerifyOptions options{config.quad_order, config.fd_step,
                              config.profile == ToleranceProfile::Strict};
  const std::vector<CheckResult> results = run_verification(options);
  int failures = 0;
  char line[320];
  for (const CheckResult& r : results) {
    if (!r.passed) ++failures;
    std::snprintf(line, sizeof line, "%s  %-22s %-50s measured=%.3e tolerance=%.1e\n",
                  r.passed ? "PASS" : "FAIL", r.module.c_str(), r.name.c_str(), r.measured,
                  r.tolerance);
    report << line;
  }
  report << (failures == 0 ? "all " : "") << results.size() - failures << " of " << results.size()
         << " checks passed\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + config.out + "' for writing");
  }
  std::ostream& sink = config.out.empty() ? out : file;

  int status = kExitOk;
  if (config.command == Command::Verify) {
    if (config.out.empty()) {
      status = run_verify(config, out);
    } else {
      std::ostringstream report;
      status = run_verify(config, report);
      out << report.str();
      sink << report.str();
    }
  } else {
    const Table table = evaluate(config);
    if (config.format == Format::Csv) {
      write_csv(sink, table, config, utc_timestamp());
    } else {
      write_json(sink, table, config, utc_timestamp());
    }
  }
  if (!config.out.empty()) {
    file.flush();
    if (!file) throw IoError("write to '" + config.out + "' failed");
    err << "wrote " << config.out << '\n';
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  bool help = false;
  try {
    const RunConfig config = parse_args(argc, argv, &help);
    return run(config, out, err);
  } catch (const UsageError& e) {
    if (help) {
      out << e.what();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace covosc::cli
