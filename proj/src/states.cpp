#include "gaussep/states.hpp"

#include <cmath>
#include <numbers>

namespace gaussep {

namespace {

CovarianceMatrix block_state(std::size_t n, double q_diag, double q_off, double cross) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd s(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      s(i, j) = i == j ? q_diag : q_off;
      s(m + i, m + j) = i == j ? 1.0 : -1.0 / 8.0;
      s(i, m + j) = cross;
      s(m + j, i) = cross;
    }
  }
  return CovarianceMatrix(s);
}

}  // namespace

StateFixture paper_state_3mode() {
  return {"paper3", block_state(3, 6.0 / 5.0, 1.0 / 5.0, 1.0 / 10.0),
          {{Criterion::ppt, false}, {Criterion::scaling_legacy, false},
           {Criterion::scaling_extended, true}}};
}

StateFixture paper_state_3mode_modified() {
  return {"paper3-modified", block_state(3, 6.0 / 5.0, 1.0 / 5.0, 1.0 / 5.0),
          {{Criterion::scaling_legacy, true}}};
}

StateFixture paper_state_4mode() {
  return {"paper4", block_state(4, 8.0 / 5.0, 2.0 / 5.0, 1.0 / 50.0),
          {{Criterion::ppt, false}, {Criterion::scaling_legacy, false},
           {Criterion::scaling_extended, true}}};
}

StateFixture paper_state_4mode_modified() {
  return {"paper4-modified", block_state(4, 8.0 / 5.0, 2.0 / 5.0, 1.0 / 10.0),
          {{Criterion::scaling_legacy, true}}};
}

std::vector<std::string> fixture_names() {
  return {"paper3", "paper3-modified", "paper4", "paper4-modified"};
}

std::optional<StateFixture> fixture_by_name(std::string_view name) {
  if (name == "paper3") return paper_state_3mode();
  if (name == "paper3-modified") return paper_state_3mode_modified();
  if (name == "paper4") return paper_state_4mode();
  if (name == "paper4-modified") return paper_state_4mode_modified();
  return std::nullopt;
}

CovarianceMatrix two_mode_squeezed(double r) {
  const double c = std::cosh(2 * r) / 2;
  const double s = std::sinh(2 * r) / 2;
  Eigen::Matrix4d m;
  m << c, s, 0, 0,
       s, c, 0, 0,
       0, 0, c, -s,
       0, 0, -s, c;
  return CovarianceMatrix(m);
}

double StateRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StateRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Eigen::Matrix2d random_single_mode_block(StateRng& rng) {
  const double nu = rng.uniform(0.5, 2.0);
  const double r = rng.uniform(0.0, 1.0);
  const double theta = rng.uniform(0.0, std::numbers::pi);
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(theta).toRotationMatrix();
  const Eigen::Vector2d d(nu * std::exp(2 * r), nu * std::exp(-2 * r));
  Eigen::Matrix2d b = rot * d.asDiagonal() * rot.transpose();
  b(1, 0) = b(0, 1);
  return b;
}

CovarianceMatrix random_single_mode(std::uint64_t seed) {
  StateRng rng(seed);
  return CovarianceMatrix(random_single_mode_block(rng));
}

CovarianceMatrix random_separable(std::size_t n, std::size_t k, std::uint64_t seed,
                                  const SeparableOptions& options) {
  if (n == 0 || k == 0) throw InvalidArgument("random_separable: n and k must be >= 1");
  StateRng rng(seed);
  const auto m = static_cast<Eigen::Index>(n);

  // Dirichlet(1, ..., 1) weights from normalized exponentials.
  std::vector<double> w(k);
  double total = 0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (std::size_t j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Matrix2d b = random_single_mode_block(rng);
      const double wj = w[j] / total;
      s(i, i) += wj * b(0, 0);
      s(m + i, m + i) += wj * b(1, 1);
      s(i, m + i) += wj * b(0, 1);
      s(m + i, i) += wj * b(1, 0);
    }
  }

  if (options.noise_norm_max > 0) {
    Eigen::MatrixXd a(2 * m, 2 * m);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    Eigen::MatrixXd p = a * a.transpose();
    const double norm = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(p, Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .maxCoeff();
    if (norm > 0) p *= rng.uniform(0.0, options.noise_norm_max) / norm;
    s += 0.5 * (p + p.transpose());
  }
  return CovarianceMatrix(s);
}

}  // namespace gaussep
