#include "gaussep/scan.hpp"

#include <algorithm>
#include <sstream>

#include "gaussep/box_search.hpp"
#include "gaussep/criteria.hpp"
#include "gaussep/detail/parallel.hpp"

namespace gaussep {

std::size_t NegativityMap::negative_count() const {
  return static_cast<std::size_t>((values.array() < -tol).count());
}

std::vector<Interval> active_intervals(const CovarianceMatrix& sigma, RangeMode mode,
                                       const std::vector<Interval>& custom_intervals) {
  switch (mode) {
    case RangeMode::legacy_unit: return unit_range(sigma.modes()).intervals;
    case RangeMode::extended: return scaling_range(sigma).intervals;
    case RangeMode::custom:
      if (custom_intervals.size() != sigma.modes()) {
        throw InvalidArgument("custom range needs one interval per mode");
      }
      for (const auto& iv : custom_intervals)
        if (!(iv.lo < iv.hi)) throw InvalidArgument("custom interval must have lo < hi");
      return custom_intervals;
  }
  throw InvalidArgument("unknown range mode");
}

namespace {

void validate(const CovarianceMatrix& sigma, const ScanConfig& c,
              const std::vector<Interval>& intervals) {
  const auto [a, b] = c.free_modes;
  const std::size_t n = sigma.modes();
  if (a >= n || b >= n || a == b) throw InvalidArgument("scan axes must be two distinct modes");
  if (c.resolution < 2) throw InvalidArgument("scan resolution must be >= 2");
  for (std::size_t k = 0; k < n; ++k) {
    if (k == a || k == b) {
      if (c.fixed_lambdas.count(k)) {
        throw InvalidArgument("mode " + std::to_string(k + 1) + " is both free and fixed");
      }
      continue;
    }
    const auto it = c.fixed_lambdas.find(k);
    if (it == c.fixed_lambdas.end()) {
      throw InvalidArgument("mode " + std::to_string(k + 1) + " needs a fixed lambda");
    }
    if (!intervals[k].contains(it->second)) {
      std::ostringstream msg;
      msg << "fixed lambda_" << k + 1 << " = " << it->second << " lies outside the active range ["
          << intervals[k].lo << ", " << intervals[k].hi << "]";
      throw InvalidArgument(msg.str());
    }
  }
  for (const auto& [k, v] : c.fixed_lambdas)
    if (k >= n) throw InvalidArgument("fixed lambda for nonexistent mode " + std::to_string(k + 1));
}

}  // namespace

ScalingVector slice_point(const CovarianceMatrix& sigma, const ScanConfig& config, double a,
                          double b) {
  Eigen::VectorXd l(static_cast<Eigen::Index>(sigma.modes()));
  for (const auto& [k, v] : config.fixed_lambdas) l(static_cast<Eigen::Index>(k)) = v;
  l(static_cast<Eigen::Index>(config.free_modes.first)) = a;
  l(static_cast<Eigen::Index>(config.free_modes.second)) = b;
  return ScalingVector(std::move(l));
}

NegativityMap grid_scan(const CovarianceMatrix& sigma, const ScanConfig& config) {
  const auto intervals = active_intervals(sigma, config.range_mode, config.custom_intervals);
  validate(sigma, config, intervals);

  NegativityMap map;
  map.tol = config.tol;
  map.axis_a = make_axis(intervals[config.free_modes.first], config.resolution);
  map.axis_b = make_axis(intervals[config.free_modes.second], config.resolution);
  const auto rows = static_cast<Eigen::Index>(map.axis_a.size());
  const auto cols = static_cast<Eigen::Index>(map.axis_b.size());
  map.values.resize(rows, cols);

  // Each node is written by exactly one worker; no cross-node accumulation.
  detail::parallel_chunks(static_cast<std::size_t>(rows * cols), config.threads,
                          [&](std::size_t begin, std::size_t end, unsigned) {
                            for (std::size_t flat = begin; flat < end; ++flat) {
                              const auto i = static_cast<Eigen::Index>(flat) / cols;
                              const auto j = static_cast<Eigen::Index>(flat) % cols;
                              map.values(i, j) = scaled_determinant(
                                  sigma,
                                  slice_point(sigma, config, map.axis_a[static_cast<std::size_t>(i)],
                                              map.axis_b[static_cast<std::size_t>(j)]),
                                  config.tol);
                            }
                          });

  // Row-major first occurrence, i.e. lexicographically smallest node.
  Eigen::Index bi = 0, bj = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (map.values(i, j) < map.values(bi, bj)) {
        bi = i;
        bj = j;
      }
  map.min_value = map.values(bi, bj);
  map.min_point = {map.axis_a[static_cast<std::size_t>(bi)], map.axis_b[static_cast<std::size_t>(bj)]};
  map.negative_fraction =
      static_cast<double>(map.negative_count()) / static_cast<double>(rows * cols);
  return map;
}

MinDeterminant find_min_determinant(const CovarianceMatrix& sigma, RangeMode mode,
                                    std::size_t resolution,
                                    const std::vector<Interval>& custom_intervals, double tol,
                                    unsigned threads) {
  const auto intervals = active_intervals(sigma, mode, custom_intervals);
  const std::size_t res = resolution == 0 ? default_resolution(sigma.modes()) : resolution;
  std::vector<std::vector<double>> axes;
  Eigen::VectorXd steps(static_cast<Eigen::Index>(sigma.modes()));
  for (std::size_t i = 0; i < sigma.modes(); ++i) {
    axes.push_back(make_axis(intervals[i], res, /*snap_unit=*/true));
    steps(static_cast<Eigen::Index>(i)) = axis_step(axes.back());
  }
  const ScalingObjective objective = [&sigma, tol](const ScalingVector& l) {
    return scaled_determinant(sigma, l, tol);
  };
  const BoxMinimum grid = grid_minimum(axes, objective, threads);
  const BoxMinimum refined = refine_minimum(grid, intervals, steps, objective);
  return {ScalingVector(refined.point, 0.0), refined.value};
}

std::string ascii_preview(const NegativityMap& map, std::size_t max_cells) {
  const auto rows = static_cast<std::size_t>(map.values.rows());
  const auto cols = static_cast<std::size_t>(map.values.cols());
  const std::size_t stride_r = std::max<std::size_t>(1, (rows + max_cells - 1) / max_cells);
  const std::size_t stride_c = std::max<std::size_t>(1, (cols + max_cells - 1) / max_cells);
  std::string out;
  for (std::size_t i = 0; i < rows; i += stride_r) {
    for (std::size_t j = 0; j < cols; j += stride_c) {
      // A cell is negative if any node it covers is.
      bool neg = false;
      for (std::size_t di = 0; di < stride_r && i + di < rows; ++di)
        for (std::size_t dj = 0; dj < stride_c && j + dj < cols; ++dj)
          neg = neg || map.values(static_cast<Eigen::Index>(i + di),
                                  static_cast<Eigen::Index>(j + dj)) < -map.tol;
      out.push_back(neg ? '#' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace gaussep
