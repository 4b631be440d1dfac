#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "covosc/cli/app.hpp"
#include "covosc/wigner.hpp"

using namespace covosc::cli;

namespace {

RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "covosc");
  return parse_args(static_cast<int>(args.size()), args.data());
}

int invoke(std::vector<const char*> args, std::string* out_text = nullptr,
           std::string* err_text = nullptr) {
  args.insert(args.begin(), "covosc");
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(args.size()), args.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("eta ranges") {
  const EtaRange single = parse_eta_range("0.5");
  CHECK(single.is_single());
  CHECK(single.values() == std::vector<double>{0.5});

  const EtaRange r = parse_eta_range("0:3:0.1");
  const std::vector<double> v = r.values();
  REQUIRE(v.size() == 31);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == doctest::Approx(3.0).epsilon(1e-15));
  // stop within half a step is kept, beyond it dropped
  CHECK(parse_eta_range("0:1.04:0.1").values().size() == 11);
  CHECK(parse_eta_range("0:0.96:0.1").values().size() == 11);

  CHECK_THROWS_AS(parse_eta_range("0:1"), UsageError);
  CHECK_THROWS_AS(parse_eta_range("0:1:0"), UsageError);
  CHECK_THROWS_AS(parse_eta_range("1:0:0.1"), UsageError);
  CHECK_THROWS_AS(parse_eta_range("abc"), UsageError);
}

TEST_CASE("grid specs") {
  const GridSpec g = parse_grid("-4:4:81");
  const std::vector<double> axis = g.axis();
  REQUIRE(axis.size() == 81);
  CHECK(axis.front() == -4.0);
  CHECK(axis[40] == 0.0);
  CHECK(axis.back() == 4.0);
  CHECK_THROWS_AS(parse_grid("-4:4:1"), UsageError);
  CHECK_THROWS_AS(parse_grid("-4:4:2.5"), UsageError);
  CHECK_THROWS_AS(parse_grid("4:-4:10"), UsageError);
  CHECK_THROWS_AS(parse_grid("-4:4"), UsageError);
}

TEST_CASE("argument parsing") {
  const RunConfig c = parse({"wigner-grid", "--eta", "0.6931", "--grid", "-2:2:5", "--format", "json"});
  CHECK(c.command == Command::WignerGrid);
  CHECK(c.eta.values() == std::vector<double>{0.6931});
  CHECK(c.grid.points == 5);
  CHECK(c.format == Format::Json);

  const RunConfig v = parse({"verify", "--tolerance-profile", "strict", "--quad-order", "80", "--fd-step", "2e-3"});
  CHECK(v.command == Command::Verify);
  CHECK(v.profile == ToleranceProfile::Strict);
  CHECK(v.quad_order == 80);
  CHECK(v.fd_step == 2e-3);

  CHECK_THROWS_AS(parse({}), UsageError);
  CHECK_THROWS_AS(parse({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(evaluate(parse({"density", "--eta", "0:1:0.5"})), UsageError);
  CHECK_THROWS_AS(parse({"wavefunction", "--n", "-1"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "--quad-order", "1000"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "--fd-step", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"schmidt", "--eta", "25"}), UsageError);
}

TEST_CASE("entropy-curve table") {
  const Table t = evaluate(parse({"entropy-curve", "--eta", "0:3:0.1"}));
  REQUIRE(t.rows.size() == 31);
  CHECK(t.rows[0][0] == 0.0);
  CHECK(t.rows[0][1] == 0.0);
  for (const auto& row : t.rows) CHECK(std::abs(row[1] - row[2]) < 1e-9);
}

TEST_CASE("wigner-grid table") {
  const Table t = evaluate(parse({"wigner-grid", "--eta", "0.6931", "--grid", "-4:4:81"}));
  REQUIRE(t.rows.size() == 81 * 81);
  REQUIRE(t.axes.size() == 2);
  CHECK(t.axes[0].name == "z");
  CHECK(t.axes[1].name == "p");
  const auto& center = t.rows[40 * 81 + 40];
  CHECK(center[0] == 0.0);
  CHECK(center[1] == 0.0);
  CHECK(center[2] == doctest::Approx(0.470588).epsilon(1e-4));
  CHECK(center[2] == doctest::Approx(covosc::wigner_closed(covosc::Rapidity(0.6931), {0, 0})));
  // row-major, z outer
  CHECK(t.rows[1][0] == -4.0);
  CHECK(t.rows[1][1] == -3.9);
}

TEST_CASE("schmidt table") {
  const Table t = evaluate(parse({"schmidt", "--eta", "0.6931471805599453", "--n", "3"}));
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0][1] == doctest::Approx(0.8));
  CHECK(t.rows[1][2] == doctest::Approx(0.2304));
  CHECK(t.rows[3][3] == doctest::Approx(1.0 - std::pow(0.36, 4)));
}

TEST_CASE("CSV round-trips at full precision") {
  const RunConfig c = parse({"density", "--eta", "0.3", "--grid", "-2:2:7"});
  const Table t = evaluate(c);
  std::ostringstream os;
  write_csv(os, t, c, "fixed");
  const std::vector<std::string> lines = data_lines(os.str());
  REQUIRE(lines.size() == t.rows.size() + 1);
  CHECK(lines[0] == "z,zp,rho_closed,rho_numeric");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::istringstream row(lines[i + 1]);
    std::string cell;
    for (std::size_t j = 0; std::getline(row, cell, ','); ++j) {
      CHECK(std::strtod(cell.c_str(), nullptr) == t.rows[i][j]);
    }
  }
  CHECK(os.str().find("# generated: fixed\n") != std::string::npos);
  CHECK(os.str().find("# layout: row-major, z outer, zp inner") != std::string::npos);
}

TEST_CASE("JSON layout") {
  const RunConfig c = parse({"wavefunction", "--eta", "1", "--n", "2", "--grid", "-1:1:3"});
  std::ostringstream os;
  write_json(os, evaluate(c), c, "fixed");
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["config"]["generated"] == "fixed");
  CHECK(j["config"]["command"] == "wavefunction");
  CHECK(j["columns"] == nlohmann::json({"z", "t", "psi"}));
  CHECK(j["data"].size() == 9);
  CHECK(j["axes"]["z"].size() == 3);
  CHECK(j["layout"] == "row-major");
}

TEST_CASE("output is deterministic for a fixed timestamp") {
  const RunConfig c = parse({"wigner-grid", "--eta", "1.2", "--grid", "-3:3:9"});
  std::ostringstream a, b;
  write_csv(a, evaluate(c), c, "t");
  write_csv(b, evaluate(c), c, "t");
  CHECK(a.str() == b.str());
}

TEST_CASE("exit codes") {
  std::string out, err;
  CHECK(invoke({"--help"}, &out) == kExitOk);
  CHECK(out.find("entropy-curve") != std::string::npos);
  CHECK(invoke({"--version"}, &out) == kExitOk);
  CHECK(out == std::string("covosc ") + kVersion + "\n");
  CHECK(invoke({"bogus"}, nullptr, &err) == kExitUsage);
  CHECK(err.find("usage error") != std::string::npos);
  CHECK(invoke({"density", "--eta", "0:1:0.5"}) == kExitUsage);
  CHECK(invoke({"schmidt", "--eta", "1", "--out", "/nonexistent-dir/x.csv"}) == kExitIo);

  const auto path = std::filesystem::temp_directory_path() / "covosc_test_cli.csv";
  CHECK(invoke({"schmidt", "--eta", "1", "--n", "4", "--out", path.c_str()}, &out, &err) == kExitOk);
  CHECK(std::filesystem::exists(path));
  CHECK(out.empty());
  std::filesystem::remove(path);
}
