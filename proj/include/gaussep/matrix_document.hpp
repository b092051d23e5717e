#ifndef GAUSSEP_MATRIX_DOCUMENT_HPP
#define GAUSSEP_MATRIX_DOCUMENT_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gaussep/covariance.hpp"
#include "gaussep/scan.hpp"

namespace gaussep {

// Text file holding one covariance matrix:
//
//   # comment
//   n = 3
//   name = paper3
//   ordering = q-first
//   1.2 0.2 0.2 0.1 0.1 0.1
//   ...                        (2n rows, whitespace or comma separated)
//
// Header keys accept "key = value" or "key: value". Only n is required.
struct MatrixDocument {
  std::size_t n = 0;
  Eigen::MatrixXd matrix;
  std::string name;
  std::string ordering = "q-first";
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDocumentSymmetryTolerance = 1e-9;

MatrixDocument parse_matrix_document(std::istream& in);
MatrixDocument read_matrix_document(const std::string& path);
void write_matrix_document(std::ostream& out, const MatrixDocument& doc);

/// Validates symmetry to 1e-9 (naming the first offending row/column) and
/// returns the symmetrized covariance matrix.
CovarianceMatrix to_covariance(const MatrixDocument& doc);
MatrixDocument to_document(const CovarianceMatrix& sigma, std::string name = {});

/// Shortest-roundtrip-safe text with 17 significant digits, '.' decimal
/// point regardless of locale.
std::string format_double(double x);

/// CSV: first row "lambda_a\lambda_b" then the axis-b nodes; each further
/// row starts with its axis-a node followed by the determinant values.
void write_negativity_csv(std::ostream& out, const NegativityMap& map, std::size_t mode_a,
                          std::size_t mode_b);

}  // namespace gaussep

#endif  // GAUSSEP_MATRIX_DOCUMENT_HPP
