#ifndef GAUSSEP_SCAN_HPP
#define GAUSSEP_SCAN_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaussep/covariance.hpp"
#include "gaussep/scaling.hpp"

namespace gaussep {

enum class RangeMode { legacy_unit, extended, custom };

struct ScanConfig {
  std::pair<std::size_t, std::size_t> free_modes{0, 1};  // 0-based, distinct
  std::map<std::size_t, double> fixed_lambdas;          // every other mode
  std::size_t resolution = 201;
  RangeMode range_mode = RangeMode::extended;
  std::vector<Interval> custom_intervals;               // one per mode, custom only
  double tol = kDefaultTolerance;
  unsigned threads = 0;
};

/// Scaled determinant over a 2-D slice of lambda space.
/// values(a, b) is taken at (axis_a[a], axis_b[b]).
struct NegativityMap {
  std::vector<double> axis_a;
  std::vector<double> axis_b;
  Eigen::MatrixXd values;
  double min_value = 0.0;
  std::pair<double, double> min_point{0.0, 0.0};
  double negative_fraction = 0.0;
  double tol = kDefaultTolerance;

  std::size_t negative_count() const;
};

/// Per-mode intervals for a range mode. custom_intervals is only read for
/// RangeMode::custom.
std::vector<Interval> active_intervals(const CovarianceMatrix& sigma, RangeMode mode,
                                       const std::vector<Interval>& custom_intervals = {});

/// Full lambda vector for slice node (a, b).
ScalingVector slice_point(const CovarianceMatrix& sigma, const ScanConfig& config, double a,
                          double b);

NegativityMap grid_scan(const CovarianceMatrix& sigma, const ScanConfig& config);

struct MinDeterminant {
  ScalingVector lambda;
  double value;
};

/// Global minimum of the scaled determinant over the n-dimensional box of a
/// range mode: grid at the criteria resolution, then coordinate descent.
MinDeterminant find_min_determinant(const CovarianceMatrix& sigma, RangeMode mode,
                                    std::size_t resolution = 0,
                                    const std::vector<Interval>& custom_intervals = {},
                                    double tol = kDefaultTolerance, unsigned threads = 0);

/// Sign glyphs, one text row per axis-a node: '#' negative below -tol,
/// '.' nonnegative.
std::string ascii_preview(const NegativityMap& map, std::size_t max_cells = 64);

}  // namespace gaussep

#endif  // GAUSSEP_SCAN_HPP
