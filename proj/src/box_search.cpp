#include "gaussep/box_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaussep/detail/parallel.hpp"

namespace gaussep {

std::vector<double> make_axis(Interval interval, std::size_t resolution, bool snap_unit,
                              double floor) {
  if (resolution < 2) throw InvalidArgument("grid resolution must be >= 2");
  if (!(interval.lo < interval.hi)) throw InvalidArgument("grid interval must have lo < hi");
  const double span = interval.hi - interval.lo;
  const double last = static_cast<double>(resolution - 1);
  std::vector<double> nodes;
  nodes.reserve(resolution + 2);
  for (std::size_t i = 0; i < resolution; ++i) {
    double x = i + 1 == resolution ? interval.hi
                                   : interval.lo + span * static_cast<double>(i) / last;
    if (std::abs(x) < floor) {
      x = interval.lo + span * static_cast<double>(2 * i + 1) / (2.0 * last);
      if (std::abs(x) < floor) throw SingularScaling("grid too fine to avoid lambda = 0");
    }
    nodes.push_back(x);
  }
  if (snap_unit) {
    for (double u : {-1.0, 1.0})
      if (interval.contains(u)) nodes.push_back(u);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

double axis_step(const std::vector<double>& axis) {
  double step = 0.0;
  for (std::size_t i = 1; i < axis.size(); ++i) step = std::max(step, axis[i] - axis[i - 1]);
  return step;
}

namespace {

// Strict weak order on (value, flat index); flat index order is
// lexicographic order of grid points because axes are ascending.
struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
  bool better_than(const Candidate& o) const {
    return value < o.value || (value == o.value && index < o.index);
  }
};

Eigen::VectorXd point_at(std::span<const std::vector<double>> axes, std::size_t flat) {
  Eigen::VectorXd p(static_cast<Eigen::Index>(axes.size()));
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t len = axes[k].size();
    p(static_cast<Eigen::Index>(k)) = axes[k][flat % len];
    flat /= len;
  }
  return p;
}

}  // namespace

BoxMinimum grid_minimum(std::span<const std::vector<double>> axes,
                        const ScalingObjective& objective, unsigned threads) {
  if (axes.empty()) throw InvalidArgument("grid_minimum: no axes");
  std::size_t total = 1;
  for (const auto& a : axes) {
    if (a.empty()) throw InvalidArgument("grid_minimum: empty axis");
    total *= a.size();
  }
  const unsigned workers = detail::resolve_threads(threads, total);
  std::vector<Candidate> best(workers);
  detail::parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    Candidate local;
    for (std::size_t flat = begin; flat < end; ++flat) {
      const Candidate c{objective(ScalingVector(point_at(axes, flat), 0.0)), flat};
      if (c.better_than(local)) local = c;
    }
    best[w] = local;
  });
  Candidate winner;
  for (const auto& c : best)
    if (c.better_than(winner)) winner = c;
  return {point_at(axes, winner.index), winner.value};
}

BoxMinimum refine_minimum(const BoxMinimum& start, std::span<const Interval> box,
                          Eigen::VectorXd steps, const ScalingObjective& objective,
                          int iterations, double floor) {
  const Eigen::Index n = start.point.size();
  if (static_cast<std::size_t>(n) != box.size() || steps.size() != n) {
    throw InvalidArgument("refine_minimum: dimension mismatch");
  }
  BoxMinimum cur = start;
  for (int it = 0; it < iterations; ++it) {
    bool improved = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Interval iv = box[static_cast<std::size_t>(i)];
      for (double dir : {-1.0, 1.0}) {
        Eigen::VectorXd cand = cur.point;
        cand(i) = std::clamp(cur.point(i) + dir * steps(i), iv.lo, iv.hi);
        if (cand(i) == cur.point(i) || std::abs(cand(i)) < floor) continue;
        const double f = objective(ScalingVector(cand, floor));
        if (f < cur.value) {
          cur = {std::move(cand), f};
          improved = true;
          break;
        }
      }
    }
    if (!improved) steps *= 0.5;
  }
  return cur;
}

}  // namespace gaussep
