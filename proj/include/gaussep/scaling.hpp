#ifndef GAUSSEP_SCALING_HPP
#define GAUSSEP_SCALING_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "gaussep/covariance.hpp"

namespace gaussep {

inline constexpr double kLambdaFloor = 1e-3;

/// Per-mode momentum scaling parameters lambda_1..lambda_n.
///
/// Scaling mode i divides row and column n+i of the covariance matrix by
/// lambda_i, so Delta_i becomes Delta_i / lambda_i^2. lambda = -1 on a mode
/// subset is partial transposition.
class ScalingVector {
 public:
  explicit ScalingVector(Eigen::VectorXd lambdas, double floor = kLambdaFloor);
  static ScalingVector ones(std::size_t n) { return ScalingVector(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n))); }

  std::size_t modes() const { return static_cast<std::size_t>(lambdas_.size()); }
  const Eigen::VectorXd& values() const { return lambdas_; }
  double operator[](std::size_t i) const { return lambdas_(static_cast<Eigen::Index>(i)); }

  bool operator==(const ScalingVector& other) const { return lambdas_ == other.lambdas_; }

 private:
  Eigen::VectorXd lambdas_;
};

/// Elementwise product; scaling by a then by b equals scaling by a*b.
ScalingVector operator*(const ScalingVector& a, const ScalingVector& b);

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Closed per-mode intervals [-2 sqrt(Delta_i), 2 sqrt(Delta_i)] within which
/// each single-mode reduced state stays physical under scaling.
struct ScalingRange {
  std::vector<double> deltas;
  std::vector<Interval> intervals;

  std::size_t modes() const { return intervals.size(); }
  double half_width(std::size_t i) const { return intervals[i].hi; }
};

ScalingRange scaling_range(const CovarianceMatrix& sigma);

/// The unit box [-1, 1]^n.
ScalingRange unit_range(std::size_t n);

CovarianceMatrix apply_scaling(const CovarianceMatrix& sigma, const ScalingVector& lambda);

/// Real determinant of apply_scaling(sigma, lambda) + (i/2) Omega.
double scaled_determinant(const CovarianceMatrix& sigma, const ScalingVector& lambda,
                          double tol = kDefaultTolerance);

/// Smallest principal minor of order > n of the scaled uncertainty matrix,
/// the full determinant included. Exponential in n; used as an opt-in check.
double min_higher_minor(const CovarianceMatrix& sigma, const ScalingVector& lambda,
                        double tol = kDefaultTolerance);

}  // namespace gaussep

#endif  // GAUSSEP_SCALING_HPP
