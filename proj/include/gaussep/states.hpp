#ifndef GAUSSEP_STATES_HPP
#define GAUSSEP_STATES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gaussep/covariance.hpp"
#include "gaussep/criteria.hpp"

namespace gaussep {

struct StateFixture {
  std::string name;
  CovarianceMatrix sigma;
  std::map<Criterion, bool> expected;  // detection outcome per criterion
};

// Three-mode mixed state: q-block 6/5 diagonal and 1/5 off-diagonal,
// p-block 1 and -1/8, every q-p cross entry 1/10.
StateFixture paper_state_3mode();
// As above with every q-p cross entry 1/5.
StateFixture paper_state_3mode_modified();
// Four-mode mixed state: q-block 8/5 and 2/5, p-block 1 and -1/8, cross 1/50.
StateFixture paper_state_4mode();
// As above with every q-p cross entry 1/10.
StateFixture paper_state_4mode_modified();

std::vector<std::string> fixture_names();
std::optional<StateFixture> fixture_by_name(std::string_view name);

/// Two-mode squeezed vacuum with squeezing r, q-first ordering.
CovarianceMatrix two_mode_squeezed(double r);

/// Random engine for the generators: std::mt19937_64, whose output sequence
/// is fixed by the C++ standard. Doubles are drawn as (x >> 11) * 2^-53, so
/// generated states are identical on every platform.
class StateRng {
 public:
  explicit StateRng(std::uint64_t seed) : engine_(seed) {}
  double uniform();                   // [0, 1)
  double uniform(double lo, double hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// R(theta) diag(nu e^{2r}, nu e^{-2r}) R(theta)^T with nu in [1/2, 2],
/// r in [0, 1], theta in [0, pi). Delta = nu^2 >= 1/4.
CovarianceMatrix random_single_mode(std::uint64_t seed);
Eigen::Matrix2d random_single_mode_block(StateRng& rng);

struct SeparableOptions {
  double noise_norm_max = 2.0;  // spectral norm bound of the classical noise term
};

/// sum_j w_j (direct sum of random single-mode blocks) + P, with Dirichlet
/// weights w_j and P positive semidefinite of spectral norm <= noise_norm_max.
CovarianceMatrix random_separable(std::size_t n, std::size_t k, std::uint64_t seed,
                                  const SeparableOptions& options = {});

}  // namespace gaussep

#endif  // GAUSSEP_STATES_HPP
