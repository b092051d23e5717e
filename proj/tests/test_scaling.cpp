#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaussep/scaling.hpp"
#include "gaussep/states.hpp"
#include "oracles.hpp"

using namespace gaussep;

namespace {

ScalingVector lam(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return ScalingVector(v);
}

CovarianceMatrix diag_mode(double a, double b) {
  Eigen::Matrix2d m;
  m << a, 0, 0, b;
  return CovarianceMatrix(m);
}

}  // namespace

TEST_CASE("scaling vector rejects near-zero parameters") {
  CHECK_THROWS_AS(lam({1.0, 5e-4}), SingularScaling);
  CHECK_THROWS_AS(lam({0.0}), SingularScaling);
  CHECK_NOTHROW(lam({1e-3, -1e-3}));
}

TEST_CASE("scaling range") {
  const auto vac = scaling_range(CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(6, 6)));
  for (const auto& iv : vac.intervals) {
    CHECK(iv.lo == -1.0);
    CHECK(iv.hi == 1.0);
  }
  const auto r3 = scaling_range(paper_state_3mode().sigma);
  CHECK(r3.half_width(0) == doctest::Approx(2 * std::sqrt(1.19)));
  CHECK(r3.half_width(0) == doctest::Approx(2.1817).epsilon(1e-4));
  const auto r4 = scaling_range(paper_state_4mode().sigma);
  CHECK(r4.half_width(0) == doctest::Approx(2.5295).epsilon(1e-4));

  Eigen::Matrix2d degenerate;
  degenerate << 1, 1, 1, 1;
  CHECK_THROWS_AS(scaling_range(CovarianceMatrix(degenerate)), InvalidState);
}

TEST_CASE("apply_scaling") {
  const auto s = paper_state_3mode().sigma;
  CHECK(apply_scaling(s, ScalingVector::ones(3)) == s);

  const auto d = apply_scaling(diag_mode(2.0, 3.0), lam({0.5}));
  CHECK(d(0, 0) == 2.0);
  CHECK(d(1, 1) == 12.0);
  CHECK(single_mode_delta(d, 0) == doctest::Approx(6.0 / 0.25));

  SUBCASE("all -1 flips the q-p cross blocks") {
    const auto t = apply_scaling(s, lam({-1, -1, -1}));
    CHECK(t.entries().topLeftCorner(3, 3) == s.entries().topLeftCorner(3, 3));
    CHECK(t.entries().bottomRightCorner(3, 3) == s.entries().bottomRightCorner(3, 3));
    CHECK(t.entries().topRightCorner(3, 3) == -s.entries().topRightCorner(3, 3));
  }

  SUBCASE("matches row/column division oracle") {
    const auto t = apply_scaling(s, lam({0.5, 2.0, -1.5}));
    CHECK((t.entries() - oracle::scaled(s.entries(), {0.5, 2.0, -1.5})).cwiseAbs().maxCoeff() <= 1e-15);
  }

  CHECK_THROWS_AS(apply_scaling(s, lam({1, 1})), InvalidArgument);
}

TEST_CASE("scaled determinant") {
  const auto vac = CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(4, 4));
  CHECK(std::abs(scaled_determinant(vac, ScalingVector::ones(2))) <= 1e-10);

  const auto s = paper_state_3mode().sigma;
  // mpmath references.
  CHECK(scaled_determinant(s, ScalingVector::ones(3)) == doctest::Approx(0.6584375).epsilon(1e-12));
  CHECK(scaled_determinant(s, lam({0.5, 2.0, -2.0})) == doctest::Approx(-0.035712890625).epsilon(1e-10));
  CHECK(scaled_determinant(s, lam({0.5, 2.0, 2.0})) == doctest::Approx(0.002568359375).epsilon(1e-9));
  CHECK(scaled_determinant(s, lam({0.5, 0.1, 2.1})) == doctest::Approx(-3.7856986961451247).epsilon(1e-10));

  const auto m = oracle::uncertainty(oracle::scaled(s.entries(), {0.7, -1.3, 1.9}));
  CHECK(scaled_determinant(s, lam({0.7, -1.3, 1.9})) ==
        doctest::Approx(oracle::leibniz_det(m).real()).epsilon(1e-11));
}

TEST_CASE("single-mode closed form") {
  // diag(a, b): det = ab / lambda^2 - 1/4.
  for (double a : {0.5, 1.0, 2.5}) {
    for (double b : {0.5, 0.8, 3.0}) {
      const auto s = diag_mode(a, b);
      for (double l : {-3.0, -1.0, -0.2, 0.3, 1.0, 1.7, 4.0}) {
        CHECK(scaled_determinant(s, lam({l})) == doctest::Approx(a * b / (l * l) - 0.25));
      }
    }
  }
}

TEST_CASE("composition and minor stability") {
  const auto s = random_separable(3, 2, 99);
  const auto a = lam({0.5, -1.2, 2.0});
  const auto b = lam({-0.7, 1.1, 0.3});
  const auto lhs = apply_scaling(apply_scaling(s, a), b);
  const auto rhs = apply_scaling(s, a * b);
  CHECK((lhs.entries() - rhs.entries()).cwiseAbs().maxCoeff() <= 1e-12);

  const Eigen::MatrixXcd m0 = uncertainty_matrix(s);
  const Eigen::MatrixXcd m1 = uncertainty_matrix(apply_scaling(s, a));
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<Eigen::Index> rows;
    for (Eigen::Index k = 0; k < 3; ++k)
      if (mask & (1u << k)) rows.push_back(k);
    CHECK(principal_minor(m1, rows) == principal_minor(m0, rows));
  }
}

TEST_CASE("product states stay physical inside the range and fail outside") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    StateRng rng(seed);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(4, 4);
    for (Eigen::Index i = 0; i < 2; ++i) {
      const Eigen::Matrix2d b = random_single_mode_block(rng);
      s(i, i) = b(0, 0);
      s(2 + i, 2 + i) = b(1, 1);
      s(i, 2 + i) = s(2 + i, i) = b(0, 1);
    }
    const CovarianceMatrix sigma(s);
    const auto range = scaling_range(sigma);
    const double h0 = range.half_width(0), h1 = range.half_width(1);
    for (double f0 : {-1.0, -0.5, 0.3, 1.0})
      for (double f1 : {-1.0, 0.7, 1.0})
        CHECK(scaled_determinant(sigma, lam({f0 * h0, f1 * h1})) >= -kDefaultTolerance);
    CHECK(scaled_determinant(sigma, lam({1.05 * h0, 0.5 * h1})) < 0);
    CHECK(scaled_determinant(sigma, lam({0.5 * h0, -1.05 * h1})) < 0);
  }
}

TEST_CASE("higher-order minors include the determinant") {
  const auto s = paper_state_3mode().sigma;
  const auto l = lam({0.5, 2.0, -2.0});
  CHECK(min_higher_minor(s, l) <= scaled_determinant(s, l));
  CHECK(min_higher_minor(s, ScalingVector::ones(3)) >= 0);
}
