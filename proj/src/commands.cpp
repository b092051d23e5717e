#include "gaussep/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "gaussep/criteria.hpp"
#include "gaussep/matrix_document.hpp"
#include "gaussep/scan.hpp"
#include "gaussep/states.hpp"

namespace gaussep::cli {

namespace {

std::string join(const std::vector<double>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s.push_back(sep);
    s += format_double(xs[i]);
  }
  return s;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_real(const std::string& token, const std::string& what) {
  std::istringstream in(token);
  in.imbue(std::locale::classic());
  double v = 0;
  if (!(in >> v) || !(in >> std::ws).eof()) throw ParseError("cannot parse " + what + " '" + token + "'");
  return v;
}

std::size_t parse_mode(const std::string& token, std::size_t n) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("cannot parse mode index '" + token + "'");
  }
  if (pos != token.size() || v < 1 || static_cast<std::size_t>(v) > n) {
    throw ParseError("mode index '" + token + "' out of range 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(v - 1);
}

struct RangeSpec {
  RangeMode mode = RangeMode::extended;
  std::vector<Interval> intervals;
};

RangeSpec parse_range(const std::string& text) {
  if (text == "legacy") return {RangeMode::legacy_unit, {}};
  if (text == "extended") return {RangeMode::extended, {}};
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    RangeSpec spec{RangeMode::custom, {}};
    for (const auto& item : split(text.substr(prefix.size()), ',')) {
      const auto colon = item.find(':', 1);
      if (colon == std::string::npos) throw ParseError("custom interval '" + item + "' must be lo:hi");
      spec.intervals.push_back({parse_real(item.substr(0, colon), "interval bound"),
                                parse_real(item.substr(colon + 1), "interval bound")});
    }
    return spec;
  }
  throw ParseError("unknown range '" + text + "' (legacy, extended or custom:<lo:hi,...>)");
}

CovarianceMatrix load(const std::string& path) { return to_covariance(read_matrix_document(path)); }

void print_report(std::ostream& out, const PhysicalityReport& r) {
  out << "physical: " << (r.physical ? "yes" : "no") << "\n"
      << "min_eigenvalue: " << format_double(r.min_eigenvalue) << "\n"
      << "determinant: " << format_double(r.determinant) << "\n"
      << "symplectic_eigenvalues: " << join(r.symplectic_eigenvalues, ' ') << "\n";
}

int cmd_check(const std::string& input, double tol, std::ostream& out) {
  const auto sigma = load(input);
  const auto report = check_physicality(sigma, tol);
  print_report(out, report);
  out << "RESULT command=check physical=" << report.physical
      << " min_eigenvalue=" << format_double(report.min_eigenvalue)
      << " determinant=" << format_double(report.determinant)
      << " symplectic_eigenvalues=" << join(report.symplectic_eigenvalues, ',') << "\n";
  return report.physical ? kOk : kNonphysical;
}

int cmd_test(const std::string& input, const std::string& criterion_name,
             const CriterionOptions& options, std::ostream& out, std::ostream& err) {
  const auto criterion = parse_criterion(criterion_name);
  if (!criterion) throw ParseError("unknown criterion '" + criterion_name + "'");
  const auto sigma = load(input);
  const auto report = check_physicality(sigma, options.tol);
  if (!report.physical) {
    err << "input is not a physical covariance matrix (min eigenvalue "
        << format_double(report.min_eigenvalue) << ")\n";
    out << "RESULT criterion=" << to_string(*criterion) << " physical=0\n";
    return kNonphysical;
  }
  const auto v = run_criterion(*criterion, sigma, options);
  const std::string witness = v.witness ? join(to_vector(v.witness->values()), ',') : "none";
  out << "criterion: " << to_string(v.criterion) << "\n"
      << "detected: " << (v.detected ? "yes" : "no") << "\n"
      << "min_value: " << format_double(v.min_value) << "\n"
      << "grid_min_value: " << format_double(v.grid_min_value) << "\n"
      << "witness: " << witness << "\n"
      << "evaluations: " << v.evaluations << "\n";
  out << "RESULT criterion=" << to_string(v.criterion) << " detected=" << v.detected
      << " min_value=" << format_double(v.min_value) << " witness=" << witness << "\n";
  return v.detected ? kDetected : kOk;
}

struct ScanArgs {
  std::string input;
  std::string axes;
  std::string fixed;
  std::string range = "extended";
  std::string output;
  std::size_t resolution = 201;
  double tol = kDefaultTolerance;
  unsigned threads = 0;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const auto sigma = load(a.input);
  const std::size_t n = sigma.modes();
  const auto report = check_physicality(sigma, a.tol);
  if (!report.physical) {
    err << "input is not a physical covariance matrix\n";
    out << "RESULT command=scan physical=0\n";
    return kNonphysical;
  }

  ScanConfig config;
  config.resolution = a.resolution;
  config.tol = a.tol;
  config.threads = a.threads;
  const auto axes = split(a.axes, ',');
  if (axes.size() != 2) throw ParseError("--axes needs two mode indices, e.g. 2,3");
  config.free_modes = {parse_mode(axes[0], n), parse_mode(axes[1], n)};
  if (!a.fixed.empty()) {
    for (const auto& item : split(a.fixed, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("--fixed entry '" + item + "' must be mode=value");
      config.fixed_lambdas[parse_mode(item.substr(0, eq), n)] =
          parse_real(item.substr(eq + 1), "fixed lambda");
    }
  }
  const auto range = parse_range(a.range);
  config.range_mode = range.mode;
  config.custom_intervals = range.intervals;

  const NegativityMap map = grid_scan(sigma, config);
  {
    std::ofstream csv(a.output);
    if (!csv) throw ParseError("cannot write '" + a.output + "'");
    write_negativity_csv(csv, map, config.free_modes.first, config.free_modes.second);
  }
  const bool negative = map.negative_count() > 0;
  out << "min_value: " << format_double(map.min_value) << "\n"
      << "min_point: " << format_double(map.min_point.first) << ","
      << format_double(map.min_point.second) << "\n"
      << "negative_fraction: " << format_double(map.negative_fraction) << "\n"
      << "rows: lambda" << config.free_modes.first + 1 << ", columns: lambda"
      << config.free_modes.second + 1 << "\n"
      << ascii_preview(map);
  out << "RESULT command=scan detected=" << negative
      << " min_value=" << format_double(map.min_value)
      << " min_point=" << format_double(map.min_point.first) << ","
      << format_double(map.min_point.second)
      << " negative_fraction=" << format_double(map.negative_fraction) << "\n";
  return negative ? kDetected : kOk;
}

int emit_document(const MatrixDocument& doc, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    write_matrix_document(out, doc);
    return kOk;
  }
  std::ofstream file(output);
  if (!file) throw ParseError("cannot write '" + output + "'");
  write_matrix_document(file, doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement tests for Gaussian covariance matrices via momentum scaling"};
  app.require_subcommand(1);

  std::string input;
  double tol = kDefaultTolerance;

  auto* check = app.add_subcommand("check", "Test the uncertainty relation for a covariance matrix");
  check->add_option("input", input, "Matrix file")->required();
  check->add_option("--tol", tol, "Eigenvalue tolerance");

  std::string criterion;
  CriterionOptions copt;
  bool no_refine = false;
  auto* test = app.add_subcommand("test", "Run a separability criterion");
  test->add_option("input", input, "Matrix file")->required();
  test->add_option("--criterion,-c", criterion, "ppt, legacy or extended")->required();
  test->add_option("--resolution", copt.resolution, "Grid nodes per axis (0 = default)");
  test->add_option("--tol", tol, "Detection tolerance");
  test->add_option("--threads", copt.threads, "Worker threads (0 = all cores)");
  test->add_flag("--no-refine", no_refine, "Skip local refinement of the extended witness");
  test->add_flag("--minors", copt.check_higher_minors,
                 "Also check every principal minor of order > n");

  ScanArgs sargs;
  auto* scan = app.add_subcommand("scan", "Write a determinant map over a 2-D lambda slice");
  scan->add_option("input", sargs.input, "Matrix file")->required();
  scan->add_option("--axes", sargs.axes, "Two free modes, 1-based, e.g. 2,3")->required();
  scan->add_option("--fixed", sargs.fixed, "Fixed lambdas, e.g. 1=0.5");
  scan->add_option("--resolution", sargs.resolution, "Nodes per axis");
  scan->add_option("--range", sargs.range, "legacy, extended or custom:<lo:hi,...>");
  scan->add_option("--output,-o", sargs.output, "CSV output path")->required();
  scan->add_option("--tol", sargs.tol, "Negativity tolerance");
  scan->add_option("--threads", sargs.threads, "Worker threads (0 = all cores)");

  std::string fixture_name;
  std::string output;
  bool list = false;
  auto* fixtures = app.add_subcommand("fixtures", "Export a built-in fixture matrix");
  fixtures->add_option("name", fixture_name, "Fixture name");
  fixtures->add_flag("--list", list, "List fixture names");
  fixtures->add_option("--output,-o", output, "Output path (default stdout)");

  std::size_t modes = 2, mixture = 1;
  std::uint64_t seed = 0;
  double noise = SeparableOptions{}.noise_norm_max;
  auto* random = app.add_subcommand("random", "Generate a random separable covariance matrix");
  random->add_option("--modes", modes, "Mode count")->check(CLI::PositiveNumber);
  random->add_option("--mixture", mixture, "Product states in the mixture")->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "Generator seed");
  random->add_option("--noise", noise, "Spectral norm bound of the classical noise");
  random->add_option("--output,-o", output, "Output path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*check) return cmd_check(input, tol, out);
    if (*test) {
      copt.tol = tol;
      copt.refine = !no_refine;
      return cmd_test(input, criterion, copt, out, err);
    }
    if (*scan) return cmd_scan(sargs, out, err);
    if (*fixtures) {
      if (list) {
        for (const auto& name : fixture_names()) out << name << "\n";
        return kOk;
      }
      const auto fixture = fixture_by_name(fixture_name);
      if (!fixture) {
        err << "unknown fixture '" << fixture_name << "'; try --list\n";
        return kUsageError;
      }
      return emit_document(to_document(fixture->sigma, fixture->name), output, out);
    }
    if (*random) {
      const auto sigma = random_separable(modes, mixture, seed, {noise});
      return emit_document(to_document(sigma, "random-separable-" + std::to_string(seed)), output,
                           out);
    }
  } catch (const InvalidState& e) {
    err << "error: " << e.what() << "\n";
    return kNonphysical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gaussep::cli
