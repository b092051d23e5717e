#ifndef GAUSSEP_CRITERIA_HPP
#define GAUSSEP_CRITERIA_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "gaussep/covariance.hpp"
#include "gaussep/scaling.hpp"

namespace gaussep {

enum class Criterion { ppt, scaling_legacy, scaling_extended };

std::string_view to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view name);

/// Outcome of a separability test. For ppt, min_value is the smallest
/// eigenvalue over all partial transposes and the witness is the +/-1
/// vector of the offending bipartition. For the scaling tests min_value is
/// the most negative scaled determinant found.
struct CriterionVerdict {
  Criterion criterion = Criterion::ppt;
  bool detected = false;
  std::optional<ScalingVector> witness;
  double min_value = 0.0;
  double grid_min_value = 0.0;  // before refinement; equals min_value for ppt
  std::size_t evaluations = 0;
};

struct CriterionOptions {
  double tol = kDefaultTolerance;
  std::size_t resolution = 0;  // 0 picks default_resolution(n)
  bool refine = true;          // extended only, applied when the grid detects
  int refine_iterations = 20;
  bool check_higher_minors = false;
  unsigned threads = 0;        // 0 = hardware concurrency
};

/// 41 nodes per axis up to three modes, 21 for four, 11 beyond.
std::size_t default_resolution(std::size_t modes);

CriterionVerdict ppt_criterion(const CovarianceMatrix& sigma, double tol = kDefaultTolerance);

CriterionVerdict scaling_criterion_legacy(const CovarianceMatrix& sigma,
                                          const CriterionOptions& options = {});

CriterionVerdict scaling_criterion_extended(const CovarianceMatrix& sigma,
                                            const CriterionOptions& options = {});

CriterionVerdict run_criterion(Criterion c, const CovarianceMatrix& sigma,
                               const CriterionOptions& options = {});

}  // namespace gaussep

#endif  // GAUSSEP_CRITERIA_HPP
