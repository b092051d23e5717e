#ifndef GAUSSEP_COVARIANCE_HPP
#define GAUSSEP_COVARIANCE_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gaussep/errors.hpp"

namespace gaussep {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Covariance (variance) matrix of an n-mode Gaussian state.
///
/// Quadratures are ordered (q_1..q_n, p_1..p_n) in units where the vacuum
/// has variance 1/2. First moments are not stored: the separability tests
/// depend on the second moments only.
///
/// Construction rejects non-finite input and asymmetry above the given
/// tolerance, then stores the exactly symmetrized matrix.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(const Eigen::MatrixXd& entries,
                            double symmetry_tol = kSymmetryTolerance);

  std::size_t modes() const { return n_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  bool operator==(const CovarianceMatrix& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::size_t n_;
  Eigen::MatrixXd entries_;
};

/// The 2n x 2n block matrix [[0, -I], [I, 0]].
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> symplectic_form(std::size_t n) {
  if (n == 0) throw InvalidArgument("symplectic_form: mode count must be >= 1");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto m = static_cast<Eigen::Index>(n);
  Mat omega = Mat::Zero(2 * m, 2 * m);
  omega.topRightCorner(m, m) = -Mat::Identity(m, m);
  omega.bottomLeftCorner(m, m) = Mat::Identity(m, m);
  return omega;
}

/// sigma + (i/2) Omega for a real symmetric 2n x 2n matrix. Hermitian by
/// construction; the imaginary part lives only on the (i, n+i) pairs.
template <typename Derived>
Eigen::Matrix<std::complex<typename Derived::Scalar>, Eigen::Dynamic, Eigen::Dynamic>
uncertainty_matrix(const Eigen::MatrixBase<Derived>& sigma) {
  using Real = typename Derived::Scalar;
  using Complex = std::complex<Real>;
  const Eigen::Index m = sigma.rows() / 2;
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> out = sigma.template cast<Complex>();
  const Complex half_i(Real(0), Real(0.5));
  for (Eigen::Index k = 0; k < m; ++k) {
    out(k, m + k) -= half_i;
    out(m + k, k) += half_i;
  }
  return out;
}

inline Eigen::MatrixXcd uncertainty_matrix(const CovarianceMatrix& sigma) {
  return uncertainty_matrix(sigma.entries());
}

struct PhysicalityReport {
  double min_eigenvalue = 0.0;
  double determinant = 0.0;
  std::vector<double> symplectic_eigenvalues;  // ascending
  bool physical = false;
};

/// Robertson-Schroedinger test sigma + (i/2) Omega >= 0, decided on the
/// smallest eigenvalue of the Hermitian uncertainty matrix.
PhysicalityReport check_physicality(const CovarianceMatrix& sigma,
                                    double tol = kDefaultTolerance);

/// Moduli of the eigenvalues of i Omega sigma, one per mode, ascending.
/// Requires sigma positive definite. Physical iff every value >= 1/2.
std::vector<double> symplectic_spectrum(const CovarianceMatrix& sigma);

/// Real determinant of a Hermitian matrix. Throws NumericalError when the
/// imaginary residue exceeds tol * max(1, |det|).
double hermitian_determinant(const Eigen::MatrixXcd& m, double tol = kDefaultTolerance);

/// Determinant of the principal submatrix on `rows` (0-based indices).
double principal_minor(const Eigen::MatrixXcd& m, std::span<const Eigen::Index> rows,
                       double tol = kDefaultTolerance);

/// sigma_qq * sigma_pp - sigma_qp^2 of mode `mode` (0-based).
double single_mode_delta(const CovarianceMatrix& sigma, std::size_t mode);

}  // namespace gaussep

#endif  // GAUSSEP_COVARIANCE_HPP
