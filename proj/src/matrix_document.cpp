#include "gaussep/matrix_document.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gaussep {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

bool parse_number(const std::string& token, double& out) {
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && std::isfinite(out);
}

}  // namespace

MatrixDocument parse_matrix_document(std::istream& in) {
  MatrixDocument doc;
  bool have_n = false;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto sep = t.find_first_of("=:");
    if (rows.empty() && sep != std::string::npos) {
      const std::string key = trim(t.substr(0, sep));
      const std::string value = trim(t.substr(sep + 1));
      if (key == "n") {
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || ptr != value.data() + value.size() || n == 0) {
          throw ParseError("line " + std::to_string(line_no) + ": n must be a positive integer");
        }
        doc.n = n;
        have_n = true;
      } else if (key == "name") {
        doc.name = value;
      } else if (key == "ordering") {
        if (value != "q-first") {
          throw ParseError("line " + std::to_string(line_no) + ": unsupported ordering '" + value +
                           "' (only q-first)");
        }
        doc.ordering = value;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown header key '" + key + "'");
      }
      continue;
    }
    const auto tokens = split_row(t);
    std::vector<double> row;
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      double v = 0;
      if (!parse_number(tokens[c], v)) {
        throw ParseError("row " + std::to_string(rows.size() + 1) + ", column " +
                         std::to_string(c + 1) + ": cannot parse '" + tokens[c] + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!have_n) throw ParseError("missing header 'n = <modes>'");
  const std::size_t dim = 2 * doc.n;
  if (rows.size() != dim) {
    throw ParseError("dimension mismatch: n = " + std::to_string(doc.n) + " needs " +
                     std::to_string(dim) + " rows, found " + std::to_string(rows.size()));
  }
  doc.matrix.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) {
      throw ParseError("dimension mismatch: row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " columns, expected " + std::to_string(dim));
    }
    for (std::size_t c = 0; c < dim; ++c)
      doc.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return doc;
}

MatrixDocument read_matrix_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix_document(in);
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_matrix_document(std::ostream& out, const MatrixDocument& doc) {
  out << "n = " << doc.n << "\n";
  if (!doc.name.empty()) out << "name = " << doc.name << "\n";
  out << "ordering = " << doc.ordering << "\n";
  for (Eigen::Index r = 0; r < doc.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < doc.matrix.cols(); ++c) {
      if (c) out << ' ';
      out << format_double(doc.matrix(r, c));
    }
    out << "\n";
  }
}

CovarianceMatrix to_covariance(const MatrixDocument& doc) {
  const auto& m = doc.matrix;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > kDocumentSymmetryTolerance) {
        throw ParseError("matrix is not symmetric at row " + std::to_string(i + 1) + ", column " +
                         std::to_string(j + 1));
      }
  return CovarianceMatrix(m, kDocumentSymmetryTolerance);
}

MatrixDocument to_document(const CovarianceMatrix& sigma, std::string name) {
  MatrixDocument doc;
  doc.n = sigma.modes();
  doc.matrix = sigma.entries();
  doc.name = std::move(name);
  return doc;
}

void write_negativity_csv(std::ostream& out, const NegativityMap& map, std::size_t mode_a,
                          std::size_t mode_b) {
  out << "lambda" << mode_a + 1 << "\\lambda" << mode_b + 1;
  for (double b : map.axis_b) out << ',' << format_double(b);
  out << '\n';
  for (std::size_t i = 0; i < map.axis_a.size(); ++i) {
    out << format_double(map.axis_a[i]);
    for (Eigen::Index j = 0; j < map.values.cols(); ++j)
      out << ',' << format_double(map.values(static_cast<Eigen::Index>(i), j));
    out << '\n';
  }
}

}  // namespace gaussep
