#include "gaussep/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaussep {

CovarianceMatrix::CovarianceMatrix(const Eigen::MatrixXd& entries, double symmetry_tol) {
  if (entries.rows() != entries.cols() || entries.rows() == 0 || entries.rows() % 2 != 0) {
    std::ostringstream msg;
    msg << "covariance matrix must be 2n x 2n with n >= 1, got " << entries.rows() << " x "
        << entries.cols();
    throw InvalidArgument(msg.str());
  }
  if (!entries.allFinite()) throw InvalidArgument("covariance matrix has non-finite entries");
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < entries.cols(); ++j) {
      if (std::abs(entries(i, j) - entries(j, i)) > symmetry_tol) {
        std::ostringstream msg;
        msg << "covariance matrix is not symmetric at (" << i + 1 << ", " << j + 1 << ")";
        throw InvalidArgument(msg.str());
      }
    }
  }
  n_ = static_cast<std::size_t>(entries.rows() / 2);
  entries_ = 0.5 * (entries + entries.transpose());
}

PhysicalityReport check_physicality(const CovarianceMatrix& sigma, double tol) {
  if (tol < 0) throw InvalidArgument("check_physicality: tolerance must be >= 0");
  const Eigen::MatrixXcd m = uncertainty_matrix(sigma);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("check_physicality: Hermitian eigensolver did not converge");
  }
  PhysicalityReport report;
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.determinant = hermitian_determinant(m, tol);
  report.physical = report.min_eigenvalue >= -tol;
  // The spectrum needs a positive definite sigma; nonphysical inputs may not
  // have one, in which case the field stays empty.
  Eigen::LLT<Eigen::MatrixXd> llt(sigma.entries());
  if (llt.info() == Eigen::Success) report.symplectic_eigenvalues = symplectic_spectrum(sigma);
  return report;
}

std::vector<double> symplectic_spectrum(const CovarianceMatrix& sigma) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma.entries());
  if (llt.info() != Eigen::Success) {
    throw InvalidState("symplectic_spectrum: covariance matrix is not positive definite");
  }
  // i Omega sigma is similar to the Hermitian i L^T Omega L (sigma = L L^T),
  // whose eigenvalues come in +/- pairs; the moduli give each value twice.
  const Eigen::MatrixXd omega = symplectic_form(sigma.modes());
  const Eigen::MatrixXd l = llt.matrixL();
  const Eigen::MatrixXd a = l.transpose() * omega * l;  // real antisymmetric
  const Eigen::MatrixXcd h = std::complex<double>(0, 1) * a.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symplectic_spectrum: eigensolver did not converge");
  }
  // Eigenvalues ascending: the top n are the positive members of each pair.
  const auto n = static_cast<Eigen::Index>(sigma.modes());
  std::vector<double> out(sigma.modes());
  for (Eigen::Index k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = std::abs(solver.eigenvalues()(n + k));
  std::sort(out.begin(), out.end());
  return out;
}

double hermitian_determinant(const Eigen::MatrixXcd& m, double tol) {
  const std::complex<double> det = m.partialPivLu().determinant();
  if (!std::isfinite(det.real()) || !std::isfinite(det.imag())) {
    throw NumericalError("determinant is not finite");
  }
  if (std::abs(det.imag()) > tol * std::max(1.0, std::abs(det.real()))) {
    std::ostringstream msg;
    msg << "determinant of Hermitian matrix has imaginary part " << det.imag();
    throw NumericalError(msg.str());
  }
  return det.real();
}

double principal_minor(const Eigen::MatrixXcd& m, std::span<const Eigen::Index> rows,
                       double tol) {
  if (rows.empty()) throw InvalidArgument("principal_minor: empty index set");
  for (Eigen::Index r : rows) {
    if (r < 0 || r >= m.rows()) throw InvalidArgument("principal_minor: index out of range");
  }
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = m(rows[static_cast<std::size_t>(a)], rows[static_cast<std::size_t>(b)]);
  return hermitian_determinant(sub, tol);
}

double single_mode_delta(const CovarianceMatrix& sigma, std::size_t mode) {
  if (mode >= sigma.modes()) throw InvalidArgument("single_mode_delta: mode index out of range");
  const auto q = static_cast<Eigen::Index>(mode);
  const auto p = static_cast<Eigen::Index>(sigma.modes() + mode);
  return sigma(q, q) * sigma(p, p) - sigma(q, p) * sigma(q, p);
}

}  // namespace gaussep
