// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line with the measured quantities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gaussep/commands.hpp"
#include "gaussep/criteria.hpp"
#include "gaussep/scan.hpp"
#include "gaussep/states.hpp"
#include "oracles.hpp"

using namespace gaussep;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void verdict_line(const char* id, bool pass, const std::string& detail) {
  std::printf("[%s] %s %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

struct ThreeWay {
  CriterionVerdict ppt, legacy, extended;
};

ThreeWay three_way(const CovarianceMatrix& s, std::size_t resolution) {
  CriterionOptions opt;
  opt.resolution = resolution;
  return {ppt_criterion(s), scaling_criterion_legacy(s, opt), scaling_criterion_extended(s, opt)};
}

}  // namespace

TEST_CASE("AC1 fixture physicality") {
  Stopwatch clock;
  bool pass = true;
  double worst = 1e9;
  for (const auto& name : fixture_names()) {
    const auto f = *fixture_by_name(name);
    const auto report = check_physicality(f.sigma);
    CHECK_MESSAGE(report.physical, name);
    pass = pass && report.physical;
    for (double nu : report.symplectic_eigenvalues) {
      CHECK(nu >= 0.5 - 1e-10);
      pass = pass && nu >= 0.5 - 1e-10;
      worst = std::min(worst, nu);
    }
  }
  const double t = clock.seconds();
  CHECK(t < 1.0);
  pass = pass && t < 1.0;
  verdict_line("AC1", pass, "min symplectic eigenvalue=" + fmt(worst) + " time=" + fmt(t) + "s");
}

TEST_CASE("AC2 three-mode central result") {
  Stopwatch clock;
  const auto v = three_way(paper_state_3mode().sigma, 41);
  const double t = clock.seconds();
  CHECK_FALSE(v.ppt.detected);
  CHECK_FALSE(v.legacy.detected);
  CHECK(v.legacy.grid_min_value >= -1e-10);
  CHECK(v.extended.detected);
  CHECK(v.extended.grid_min_value < -1e-6);
  CHECK(t < 10.0);
  const bool pass = !v.ppt.detected && !v.legacy.detected && v.legacy.grid_min_value >= -1e-10 &&
                    v.extended.detected && v.extended.grid_min_value < -1e-6 && t < 10.0;
  verdict_line("AC2", pass,
               "ppt min eig=" + fmt(v.ppt.min_value) + " legacy grid min=" +
                   fmt(v.legacy.grid_min_value) + " extended grid min=" +
                   fmt(v.extended.grid_min_value) + " time=" + fmt(t) + "s");
}

TEST_CASE("AC3 four-mode central result") {
  Stopwatch clock;
  const auto v = three_way(paper_state_4mode().sigma, 21);
  const double t = clock.seconds();
  CHECK_FALSE(v.ppt.detected);
  CHECK_FALSE(v.legacy.detected);
  CHECK(v.legacy.grid_min_value >= -1e-10);
  CHECK(v.extended.detected);
  CHECK(v.extended.grid_min_value < -1e-6);
  CHECK(t < 60.0);
  const bool pass = !v.ppt.detected && !v.legacy.detected && v.legacy.grid_min_value >= -1e-10 &&
                    v.extended.detected && v.extended.grid_min_value < -1e-6 && t < 60.0;
  verdict_line("AC3", pass,
               "ppt min eig=" + fmt(v.ppt.min_value) + " legacy grid min=" +
                   fmt(v.legacy.grid_min_value) + " extended grid min=" +
                   fmt(v.extended.grid_min_value) + " time=" + fmt(t) + "s");
}

TEST_CASE("AC4 modified fixtures detected by the legacy criterion") {
  Stopwatch clock;
  struct Case {
    StateFixture fixture;
    std::size_t resolution;
    ScanConfig slice;
  };
  ScanConfig s3;
  s3.free_modes = {1, 2};
  s3.fixed_lambdas = {{0, 0.5}};
  s3.resolution = 41;
  s3.range_mode = RangeMode::legacy_unit;
  ScanConfig s4;
  s4.free_modes = {2, 3};
  s4.fixed_lambdas = {{0, 1.0}, {1, 0.5}};
  s4.resolution = 21;
  s4.range_mode = RangeMode::legacy_unit;
  const Case cases[] = {{paper_state_3mode_modified(), 41, s3},
                        {paper_state_4mode_modified(), 21, s4}};

  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    CriterionOptions opt;
    opt.resolution = c.resolution;
    const auto v = scaling_criterion_legacy(c.fixture.sigma, opt);
    const auto map = grid_scan(c.fixture.sigma, c.slice);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < map.axis_a.size(); ++i)
      for (std::size_t j = 0; j < map.axis_b.size(); ++j)
        if (std::abs(map.axis_a[i]) < 1 && std::abs(map.axis_b[j]) < 1 &&
            map.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) < -map.tol)
          ++inside;
    CHECK_MESSAGE(v.detected, c.fixture.name);
    CHECK_MESSAGE(inside > 0, c.fixture.name);
    pass = pass && v.detected && inside > 0;
    detail += c.fixture.name + ": legacy grid min=" + fmt(v.grid_min_value) +
              " slice min=" + fmt(map.min_value) + " negative nodes inside=" +
              std::to_string(inside) + "; ";
  }
  const double t = clock.seconds();
  CHECK(t < 10.0);
  pass = pass && t < 10.0;
  verdict_line("AC4", pass, detail + "time=" + fmt(t) + "s");
}

TEST_CASE("AC5 three-mode slice reproduction through the CLI") {
  namespace fs = std::filesystem;
  Stopwatch clock;
  const fs::path dir = fs::temp_directory_path();
  const std::string matrix = (dir / "gaussep_ac5_paper3.txt").string();
  const std::string csv = (dir / "gaussep_ac5_map.csv").string();
  std::ostringstream out, err;
  REQUIRE(cli::run({"gaussep", "fixtures", "paper3", "--output", matrix}, out, err) == 0);
  const int code = cli::run({"gaussep", "scan", matrix, "--axes", "2,3", "--fixed", "1=0.5",
                             "--range", "extended", "--resolution", "201", "--output", csv},
                            out, err);
  CHECK(code == cli::kDetected);

  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<double> axis_b;
  {
    std::stringstream header(line);
    std::string cell;
    std::getline(header, cell, ',');
    while (std::getline(header, cell, ',')) axis_b.push_back(std::stod(cell));
  }
  std::size_t rows = 0, negative = 0, negative_inside = 0;
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    const double a = std::stod(cell);
    for (std::size_t j = 0; std::getline(row, cell, ','); ++j) {
      if (std::stod(cell) < -kDefaultTolerance) {
        ++negative;
        if (std::abs(a) <= 1 && std::abs(axis_b[j]) <= 1) ++negative_inside;
      }
    }
    ++rows;
  }
  const double t = clock.seconds();
  CHECK(rows == 201);
  CHECK(axis_b.size() == 201);
  CHECK(negative > 0);
  CHECK(negative_inside == 0);
  CHECK(t < 5.0);
  const bool pass = code == cli::kDetected && rows == 201 && negative > 0 &&
                    negative_inside == 0 && t < 5.0;
  verdict_line("AC5", pass,
               "negative cells=" + std::to_string(negative) + " inside unit square=" +
                   std::to_string(negative_inside) + " time=" + fmt(t) + "s");
}

TEST_CASE("AC6 no false positives on random separable states") {
  Stopwatch clock;
  std::size_t ppt = 0, legacy = 0, extended = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto s = random_separable(n, 1 + seed % 3, seed);
    ppt += ppt_criterion(s).detected;
    legacy += scaling_criterion_legacy(s).detected;
    extended += scaling_criterion_extended(s).detected;
  }
  const double t = clock.seconds();
  CHECK(ppt == 0);
  CHECK(legacy == 0);
  CHECK(extended == 0);
  CHECK(t < 300.0);
  const bool pass = ppt == 0 && legacy == 0 && extended == 0 && t < 300.0;
  verdict_line("AC6", pass,
               "detections out of 100: ppt=" + std::to_string(ppt) + " legacy=" +
                   std::to_string(legacy) + " extended=" + std::to_string(extended) +
                   " time=" + fmt(t) + "s");
}

TEST_CASE("AC7 eigenvalue test agrees with the symplectic oracle") {
  StateRng rng(77);
  std::size_t agree = 0, physical = 0;
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 1 + t % 4;
    Eigen::MatrixXd a(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.uniform(-1, 1);
    const Eigen::MatrixXd s =
        rng.uniform(0.5, 8.0) * (a * a.transpose() / static_cast<double>(2 * n) +
                                  0.1 * Eigen::MatrixXd::Identity(2 * n, 2 * n));
    const CovarianceMatrix sigma(0.5 * (s + s.transpose()));
    const bool by_eigen = check_physicality(sigma).physical;
    const auto nu = oracle::symplectic_eigenvalues(sigma.entries());
    const bool by_oracle = nu.front() >= 0.5 - kDefaultTolerance;
    agree += by_eigen == by_oracle;
    physical += by_eigen;
  }
  CHECK(agree == 200);
  CHECK(physical > 0);
  CHECK(physical < 200);
  verdict_line("AC7", agree == 200,
               "agreement=" + std::to_string(agree) + "/200 physical=" + std::to_string(physical));
}

TEST_CASE("AC8 transform algebra") {
  StateRng rng(88);
  double identity_err = 0, composition_err = 0, minor_err = 0;
  auto random_lambda = [&](std::size_t n) {
    Eigen::VectorXd l(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < l.size(); ++i)
      l(i) = (rng.uniform() < 0.5 ? -1 : 1) * rng.uniform(0.2, 2.5);
    return ScalingVector(l);
  };
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto s = random_separable(n, 1 + t % 3, 1000 + t);
    identity_err = std::max(identity_err,
                            (apply_scaling(s, ScalingVector::ones(n)).entries() - s.entries())
                                .cwiseAbs()
                                .maxCoeff());
    const auto a = random_lambda(n), b = random_lambda(n);
    composition_err = std::max(
        composition_err, (apply_scaling(apply_scaling(s, a), b).entries() -
                          apply_scaling(s, a * b).entries())
                             .cwiseAbs()
                             .maxCoeff());
    const Eigen::MatrixXcd m0 = uncertainty_matrix(s);
    const Eigen::MatrixXcd m1 = uncertainty_matrix(apply_scaling(s, a));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Eigen::Index> rows;
      for (unsigned k = 0; k < n; ++k)
        if (mask & (1u << k)) rows.push_back(k);
      minor_err = std::max(minor_err, std::abs(principal_minor(m1, rows) - principal_minor(m0, rows)));
    }
  }
  CHECK(identity_err == 0.0);
  CHECK(composition_err <= 1e-12);
  CHECK(minor_err <= 1e-12);
  verdict_line("AC8", identity_err == 0.0 && composition_err <= 1e-12 && minor_err <= 1e-12,
               "identity err=" + fmt(identity_err) + " composition err=" + fmt(composition_err) +
                   " q-minor err=" + fmt(minor_err));
}

TEST_CASE("AC9 single-mode sign flip at 2 sqrt(Delta)") {
  bool pass = true;
  std::size_t checked = 0;
  const double step = 1e-3;
  for (double a : {0.5, 0.9, 2.0}) {
    for (double b : {0.5, 1.3, 4.0}) {
      Eigen::Matrix2d m;
      m << a, 0, 0, b;
      const CovarianceMatrix s(m);
      const double bound = 2 * std::sqrt(a * b);
      for (double sign : {-1.0, 1.0}) {
        // Walk outward on nodes 0.1 + k * step until the determinant turns
        // negative; the first negative node must lie within one step above
        // the bound (rounding allowance 1e-9 step).
        double prev = 0.1, flip = -1;
        for (int k = 1; 0.1 + k * step < 3 * bound; ++k) {
          const double x = 0.1 + k * step;
          const double d = scaled_determinant(s, ScalingVector(Eigen::VectorXd::Constant(1, sign * x)));
          if (d < -kDefaultTolerance) {
            flip = x;
            break;
          }
          prev = x;
        }
        const double slack = step * 1e-9;
        const bool ok = flip > 0 && prev <= bound + slack && flip >= bound - slack &&
                        std::abs(flip - bound) <= step + slack;
        CHECK_MESSAGE(ok, "a=" << a << " b=" << b << " sign=" << sign);
        pass = pass && ok;
        ++checked;
      }
    }
  }
  verdict_line("AC9", pass, "sign flips within one step (" + fmt(step) + ") in " +
                                std::to_string(checked) + " cases");
}
