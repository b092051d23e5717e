#include "gaussep/criteria.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "gaussep/box_search.hpp"

namespace gaussep {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::ppt: return "ppt";
    case Criterion::scaling_legacy: return "legacy";
    case Criterion::scaling_extended: return "extended";
  }
  return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
  if (name == "ppt") return Criterion::ppt;
  if (name == "legacy" || name == "scaling_legacy") return Criterion::scaling_legacy;
  if (name == "extended" || name == "scaling_extended") return Criterion::scaling_extended;
  return std::nullopt;
}

std::size_t default_resolution(std::size_t modes) {
  if (modes <= 3) return 41;
  if (modes == 4) return 21;
  return 11;
}

namespace {

void require_physical(const CovarianceMatrix& sigma, double tol) {
  if (!check_physicality(sigma, tol).physical) {
    throw InvalidState("separability test requires a physical covariance matrix");
  }
}

CriterionVerdict scaling_scan(Criterion which, const CovarianceMatrix& sigma,
                              const ScalingRange& range, const CriterionOptions& opt) {
  require_physical(sigma, opt.tol);
  const std::size_t res = opt.resolution == 0 ? default_resolution(sigma.modes()) : opt.resolution;
  if (res < 3) throw InvalidArgument("criterion grid resolution must be >= 3");

  std::vector<std::vector<double>> axes;
  Eigen::VectorXd steps(static_cast<Eigen::Index>(sigma.modes()));
  for (std::size_t i = 0; i < sigma.modes(); ++i) {
    axes.push_back(make_axis(range.intervals[i], res, /*snap_unit=*/true));
    steps(static_cast<Eigen::Index>(i)) = axis_step(axes.back());
  }

  const double tol = opt.tol;
  ScalingObjective objective;
  if (opt.check_higher_minors) {
    objective = [&sigma, tol](const ScalingVector& l) { return min_higher_minor(sigma, l, tol); };
  } else {
    objective = [&sigma, tol](const ScalingVector& l) { return scaled_determinant(sigma, l, tol); };
  }

  CriterionVerdict v;
  v.criterion = which;
  v.evaluations = 1;
  for (const auto& a : axes) v.evaluations *= a.size();

  BoxMinimum best = grid_minimum(axes, objective, opt.threads);
  v.grid_min_value = best.value;
  if (which == Criterion::scaling_extended && opt.refine && best.value < -tol) {
    best = refine_minimum(best, range.intervals, steps, objective, opt.refine_iterations);
  }
  v.min_value = best.value;
  v.detected = v.min_value < -tol;
  if (v.detected) v.witness = ScalingVector(best.point, 0.0);
  return v;
}

}  // namespace

CriterionVerdict ppt_criterion(const CovarianceMatrix& sigma, double tol) {
  require_physical(sigma, tol);
  const std::size_t n = sigma.modes();
  CriterionVerdict v;
  v.criterion = Criterion::ppt;
  v.min_value = std::numeric_limits<double>::infinity();
  std::optional<Eigen::VectorXd> worst;
  // Transposing S or its complement gives complex-conjugate uncertainty
  // matrices, so only subsets without the last mode are visited.
  const unsigned long subsets = 1ul << (n - 1);
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    Eigen::VectorXd l = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1ul << k)) l(static_cast<Eigen::Index>(k)) = -1.0;
    const auto report = check_physicality(apply_scaling(sigma, ScalingVector(l)), tol);
    ++v.evaluations;
    if (report.min_eigenvalue < v.min_value) {
      v.min_value = report.min_eigenvalue;
      worst = l;
    }
  }
  if (v.evaluations == 0) {
    // A single mode has no proper bipartition.
    v.min_value = check_physicality(sigma, tol).min_eigenvalue;
  }
  v.grid_min_value = v.min_value;
  v.detected = v.min_value < -tol;
  if (v.detected && worst) v.witness = ScalingVector(*worst);
  return v;
}

CriterionVerdict scaling_criterion_legacy(const CovarianceMatrix& sigma,
                                          const CriterionOptions& options) {
  return scaling_scan(Criterion::scaling_legacy, sigma, unit_range(sigma.modes()), options);
}

CriterionVerdict scaling_criterion_extended(const CovarianceMatrix& sigma,
                                            const CriterionOptions& options) {
  return scaling_scan(Criterion::scaling_extended, sigma, scaling_range(sigma), options);
}

CriterionVerdict run_criterion(Criterion c, const CovarianceMatrix& sigma,
                               const CriterionOptions& options) {
  switch (c) {
    case Criterion::ppt: return ppt_criterion(sigma, options.tol);
    case Criterion::scaling_legacy: return scaling_criterion_legacy(sigma, options);
    case Criterion::scaling_extended: return scaling_criterion_extended(sigma, options);
  }
  throw InvalidArgument("unknown criterion");
}

}  // namespace gaussep
