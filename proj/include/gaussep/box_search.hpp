#ifndef GAUSSEP_BOX_SEARCH_HPP
#define GAUSSEP_BOX_SEARCH_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gaussep/scaling.hpp"

namespace gaussep {

/// Grid nodes on [lo, hi]: `resolution` evenly spaced points, endpoints
/// included. A node closer than `floor` to zero is moved half a step up.
/// With `snap_unit`, -1 and +1 are added when they lie inside the interval.
///
/// Node i is computed as lo + (hi - lo) * i / (resolution - 1), so grids
/// with 2^k + 1 nodes on the same interval are nested.
std::vector<double> make_axis(Interval interval, std::size_t resolution, bool snap_unit = false,
                              double floor = kLambdaFloor);

using ScalingObjective = std::function<double(const ScalingVector&)>;

struct BoxMinimum {
  Eigen::VectorXd point;
  double value = 0.0;
};

/// Exhaustive minimum over the tensor grid spanned by `axes`. Ties go to the
/// lexicographically smallest point. The result does not depend on the
/// thread count.
BoxMinimum grid_minimum(std::span<const std::vector<double>> axes,
                        const ScalingObjective& objective, unsigned threads = 0);

/// Coordinate descent from `start`, trying +/- step on each coordinate and
/// halving all steps after a sweep without improvement. Points stay inside
/// `box` and away from zero. Never returns a value above start.value.
BoxMinimum refine_minimum(const BoxMinimum& start, std::span<const Interval> box,
                          Eigen::VectorXd steps, const ScalingObjective& objective,
                          int iterations = 20, double floor = kLambdaFloor);

/// Largest gap between neighbouring nodes of an axis.
double axis_step(const std::vector<double>& axis);

}  // namespace gaussep

#endif  // GAUSSEP_BOX_SEARCH_HPP
