#include "gaussep/scaling.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gaussep {

ScalingVector::ScalingVector(Eigen::VectorXd lambdas, double floor) : lambdas_(std::move(lambdas)) {
  if (lambdas_.size() == 0) throw InvalidArgument("scaling vector must have at least one mode");
  for (Eigen::Index i = 0; i < lambdas_.size(); ++i) {
    if (!std::isfinite(lambdas_(i)) || std::abs(lambdas_(i)) < floor) {
      std::ostringstream msg;
      msg << "scaling parameter lambda_" << i + 1 << " = " << lambdas_(i)
          << " is below the floor " << floor;
      throw SingularScaling(msg.str());
    }
  }
}

ScalingVector operator*(const ScalingVector& a, const ScalingVector& b) {
  if (a.modes() != b.modes()) throw InvalidArgument("scaling vectors differ in mode count");
  return ScalingVector(a.values().cwiseProduct(b.values()), 0.0);
}

ScalingRange scaling_range(const CovarianceMatrix& sigma) {
  ScalingRange range;
  for (std::size_t i = 0; i < sigma.modes(); ++i) {
    const double delta = single_mode_delta(sigma, i);
    if (!(delta > 0)) {
      std::ostringstream msg;
      msg << "mode " << i + 1 << " is degenerate (Delta = " << delta << ")";
      throw InvalidState(msg.str());
    }
    const double h = 2.0 * std::sqrt(delta);
    range.deltas.push_back(delta);
    range.intervals.push_back({-h, h});
  }
  return range;
}

ScalingRange unit_range(std::size_t n) {
  ScalingRange range;
  range.deltas.assign(n, 0.25);
  range.intervals.assign(n, Interval{-1.0, 1.0});
  return range;
}

namespace {

Eigen::MatrixXd scaled_entries(const CovarianceMatrix& sigma, const ScalingVector& lambda) {
  if (lambda.modes() != sigma.modes()) {
    throw InvalidArgument("scaling vector and covariance matrix differ in mode count");
  }
  const auto n = static_cast<Eigen::Index>(sigma.modes());
  Eigen::VectorXd d = Eigen::VectorXd::Ones(2 * n);
  d.tail(n) = lambda.values().cwiseInverse();
  Eigen::MatrixXd out(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < 2 * n; ++j) {
    for (Eigen::Index i = j; i < 2 * n; ++i) {
      out(i, j) = sigma(i, j) * d(i) * d(j);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

}  // namespace

CovarianceMatrix apply_scaling(const CovarianceMatrix& sigma, const ScalingVector& lambda) {
  return CovarianceMatrix(scaled_entries(sigma, lambda), 0.0);
}

double scaled_determinant(const CovarianceMatrix& sigma, const ScalingVector& lambda, double tol) {
  return hermitian_determinant(uncertainty_matrix(scaled_entries(sigma, lambda)), tol);
}

double min_higher_minor(const CovarianceMatrix& sigma, const ScalingVector& lambda, double tol) {
  const Eigen::MatrixXcd m = uncertainty_matrix(scaled_entries(sigma, lambda));
  const auto dim = static_cast<unsigned>(m.rows());
  const auto n = static_cast<unsigned>(sigma.modes());
  double best = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Index> rows;
  for (unsigned mask = 1; mask < (1u << dim); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) <= n) continue;
    rows.clear();
    for (unsigned k = 0; k < dim; ++k)
      if (mask & (1u << k)) rows.push_back(static_cast<Eigen::Index>(k));
    best = std::min(best, principal_minor(m, rows, tol));
  }
  return best;
}

}  // namespace gaussep
