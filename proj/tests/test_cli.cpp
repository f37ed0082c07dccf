#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qfisep/cli.hpp"

using namespace qfisep;
using namespace qfisep::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qfisep_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("parse_grid") {
  const auto g = parse_grid("0:1:101");
  CHECK(g.start == 0.0);
  CHECK(g.stop == 1.0);
  CHECK(g.count == 101);
  CHECK(parse_grid("0.25:0.75:3").start == 0.25);
  for (const char* bad : {"0:1", "0:1:1", "1:0:10", "0:1.5:10", "-0.1:1:10", "a:b:c", "0:1:10x"}) {
    CHECK_THROWS_AS(parse_grid(bad), UsageError);
  }
}

TEST_CASE("read_fiducial") {
  std::istringstream good("3\n0 0\n0.7071067811865476 0\n-0.7071067811865476 0\n");
  const auto f = read_fiducial(good);
  CHECK(f.dim == 3);
  CHECK(f.amplitudes(2).real() == doctest::Approx(-std::sqrt(0.5)));

  for (const char* bad : {"", "x\n", "2\n1 0\n", "2\n1 0\n0\n", "2\n1 0\n0 0\n1 1\n", "1\n1 0\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_fiducial(in), InvalidVector);
  }
}

TEST_CASE("format_number uses 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(4.0) == "4");
}

TEST_CASE("validate command") {
  const auto sic3 = run_args({"validate", "--kind", "sic", "--dim", "3"});
  CHECK(sic3.code == kExitOk);
  CHECK(sic3.out.find("elements: 9") != std::string::npos);
  CHECK(sic3.out.find("off-diagonal overlap |<psi_mu|psi_nu>|^2: 0.25") != std::string::npos);
  CHECK(sic3.out.find("result: PASS") != std::string::npos);

  const auto loo4 = run_args({"validate", "--kind", "loo", "--dim", "4"});
  CHECK(loo4.code == kExitOk);
  CHECK(loo4.out.find("elements: 16") != std::string::npos);

  CHECK(run_args({"validate", "--kind", "sic", "--dim", "5"}).code == kExitUsage);
  CHECK(run_args({"validate", "--kind", "povm", "--dim", "3"}).code == kExitUsage);
  CHECK(run_args({"validate", "--dim", "3"}).code == kExitUsage);
  CHECK(run_args({}).code == kExitUsage);
}

TEST_CASE("validate with fiducial files") {
  const auto dir = scratch_dir("fiducial");
  const auto good = dir / "qubit.txt";
  {
    // Bloch vector (1,1,1)/sqrt3.
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    std::ofstream f(good);
    f.precision(17);
    f << "2\n" << std::cos(theta / 2) << " 0\n"
      << std::sin(theta / 2) * std::cos(std::numbers::pi / 4) << ' ' << std::sin(theta / 2) * std::sin(std::numbers::pi / 4) << '\n';
  }
  CHECK(run_args({"validate", "--kind", "sic", "--dim", "2", "--fiducial", good.string()}).code == kExitOk);

  const auto bad = dir / "basis.txt";
  std::ofstream(bad) << "3\n1 0\n0 0\n0 0\n";
  const auto r = run_args({"validate", "--kind", "sic", "--dim", "3", "--fiducial", bad.string()});
  CHECK(r.code == kExitCertification);
  CHECK(r.out.find("[FAIL] overlap") != std::string::npos);

  CHECK(run_args({"validate", "--kind", "sic", "--dim", "2", "--fiducial", bad.string()}).code == kExitUsage);
  CHECK(run_args({"validate", "--kind", "sic", "--dim", "3", "--fiducial", (dir / "missing").string()}).code ==
        kExitUsage);

  // A fiducial that is not a SIC is rejected by the criterion commands too.
  CHECK(run_args({"threshold", "--dim", "3", "--obs", "sic", "--fiducial", bad.string()}).code ==
        kExitCertification);
}

TEST_CASE("evaluate command") {
  const auto r = run_args({"evaluate", "--family", "werner", "--dim", "3", "--eta", "0.9", "--obs", "loo"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("unopt_violated: false") != std::string::npos);
  CHECK(r.out.find("opt_violated: true") != std::string::npos);

  const auto s = run_args({"evaluate", "--family", "separable", "--dim", "3", "--seed", "4", "--terms", "3"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("opt_violated: false") != std::string::npos);

  CHECK(run_args({"evaluate", "--family", "isotropic", "--dim", "3"}).code == kExitUsage);
  CHECK(run_args({"evaluate", "--family", "isotropic", "--eta", "1.5"}).code == kExitUsage);
}

TEST_CASE("sweep command: CSV contract") {
  const auto dir = scratch_dir("sweep");
  const auto path = dir / "iso.csv";
  const auto r = run_args({"sweep", "--family", "isotropic", "--dim", "3", "--obs", "sic", "--grid", "0:1:101",
                           "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  const auto rows = parse_csv(slurp(path));
  REQUIRE(rows.size() == 102);
  CHECK(slurp(path).substr(0, slurp(path).find('\n')) == kSweepCsvHeader);
  CHECK(rows[1][0] == "0");
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(std::stod(rows[1][2]) == 0.0);

  // opt_total crosses the bound between eta = 0.46 and 0.47.
  CHECK(std::stod(rows[47][0]) == doctest::Approx(0.46));
  CHECK(std::stod(rows[47][2]) < std::stod(rows[47][3]));
  CHECK(std::stod(rows[48][2]) > std::stod(rows[48][3]));

  // Determinism, and independence from --jobs.
  const auto again = dir / "iso2.csv";
  run_args({"sweep", "--family", "isotropic", "--dim", "3", "--obs", "sic", "--grid", "0:1:101", "--jobs", "3",
            "--out", again.string()});
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("sweep command: Werner LOO never violates before optimization") {
  const auto r = run_args({"sweep", "--family", "werner", "--dim", "3", "--obs", "loo", "--grid", "0:1:201"});
  REQUIRE(r.code == kExitOk);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 202);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) <= std::stod(rows[i][3]) + 1e-9);
    CHECK(rows[i][5] == "0");
  }
}

TEST_CASE("sweep command: usage errors") {
  CHECK(run_args({"sweep", "--grid", "0:1:1"}).code == kExitUsage);
  CHECK(run_args({"sweep", "--family", "ghz"}).code == kExitUsage);
  CHECK(run_args({"sweep", "--mode", "sideways"}).code == kExitUsage);
  CHECK(run_args({"sweep", "--obs", "sic", "--dim", "4"}).code == kExitUsage);
  CHECK(run_args({"sweep", "--jobs", "0"}).code == kExitUsage);
}

TEST_CASE("threshold command agrees with the sweep sign change") {
  const auto thr = run_args({"threshold", "--family", "isotropic", "--dim", "3", "--obs", "loo", "--mode", "opt"});
  REQUIRE(thr.code == kExitOk);
  const double t = std::stod(thr.out);
  CHECK(t == doctest::Approx(0.46926).epsilon(1e-4));

  const auto sw = run_args({"sweep", "--family", "isotropic", "--dim", "3", "--obs", "loo", "--grid", "0:1:101"});
  const auto rows = parse_csv(sw.out);
  double first = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][6] == "1") {
      first = std::stod(rows[i][0]);
      break;
    }
  }
  CHECK(first - t >= 0.0);
  CHECK(first - t <= 0.01);

  const auto unopt = run_args({"threshold", "--family", "isotropic", "--obs", "loo", "--mode", "unopt"});
  CHECK(unopt.out == "0.66667\n");
  const auto none = run_args({"threshold", "--family", "werner", "--obs", "sic", "--mode", "unopt"});
  CHECK(none.code == kExitOk);
  CHECK(none.out == "none\n");
  const auto both = run_args({"threshold", "--family", "werner", "--obs-a", "sic", "--obs-b", "sic"});
  CHECK(both.out == "unopt: none\nopt: 0.66667\n");
}

TEST_CASE("reproduce-fig2 writes deterministic files and a summary") {
  const auto dir = scratch_dir("fig2");
  const auto r = run_args({"reproduce-fig2", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  const auto iso = slurp(dir / "fig2a_isotropic.csv");
  const auto wer = slurp(dir / "fig2b_werner.csv");
  CHECK(parse_csv(iso).size() == 202);
  CHECK(parse_csv(wer).size() == 202);
  CHECK(parse_csv(iso)[0].size() == 13);
  CHECK(r.out.find("isotropic LOO unoptimized") != std::string::npos);
  CHECK(r.out.find("werner SIC optimized") != std::string::npos);

  const auto r2 = run_args({"reproduce-fig2", "--out", dir.string(), "--jobs", "2"});
  CHECK(r2.out == r.out);
  CHECK(slurp(dir / "fig2a_isotropic.csv") == iso);
  CHECK(slurp(dir / "fig2b_werner.csv") == wer);
}

TEST_CASE("installed executable maps exit codes") {
  const std::string exe = QFISEP_CLI_PATH;
  CHECK(std::system((exe + " validate --kind loo --dim 2 > /dev/null").c_str()) == 0);
  const int status = std::system((exe + " validate --kind sic --dim 5 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == kExitUsage);
}
