// Copyright 2026 The evcopula Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evcopula/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "evcopula/io.hpp"
#include "evcopula/measures.hpp"
#include "evcopula/sampler.hpp"
#include "evcopula/transforms.hpp"
#include "evcopula/verification.hpp"

namespace evc::cli {
namespace {

using nlohmann::json;

// Reads a function from a path, "-" for stdin, or an inline JSON object.
PiecewiseLinearPickands LoadFunction(const std::string& source) {
  if (!source.empty() && source.front() == '{') return ParsePickands(source);
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::kParseError, "cannot open " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return ParsePickands(text);
}

// Writes through to a file, or to the given stream for "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path == "-" || path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::kParseError, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

json Number(double value) {
  if (std::isfinite(value)) return value;
  return nullptr;
}

json MeasuresJson(const MeasurePair& m) {
  json j{{"tau", m.tau}, {"rho", m.rho}};
  if (m.exact()) {
    j["resolution"] = "exact";
  } else {
    j["resolution"] = *m.resolution;
  }
  return j;
}

json SampleJson(const RegionSample& s) {
  return {{"function", PickandsToJson(s.function)},
          {"tau", s.tau},
          {"rho", s.rho},
          {"resolution", "exact"},
          {"slack_sharp", s.slack_sharp},
          {"slack_hl", s.slack_hl},
          {"verdict", !s.violation()}};
}

json ReportJson(const LemmaReport& report) {
  json checks = json::array();
  for (const CheckTally& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"checked", c.checked},
                      {"violations", c.violations},
                      {"worst_margin", c.checked ? Number(c.worst_margin)
                                                 : json(nullptr)},
                      {"tolerance", c.tolerance},
                      {"strict", c.strict}});
  }
  return {{"trials", report.trials},
          {"seed", report.seed},
          {"passed", report.passed()},
          {"checks", checks}};
}

struct Options {
  std::string input;
  std::string out = "-";
  std::optional<std::uint64_t> seed;
  int workers = 1;
  double x1 = 0.0;
  double y1 = 0.0;
  int trials = 0;
  int count = 0;
  int max_vertices = 16;
  std::size_t n = 0;
  bool no_header = false;
  std::string family;
  double parameter = 0.0;
  double tolerance = 1e-10;
  int grid = 1001;
};

}  // namespace

ExitCode ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonIncreasingAbscissae:
    case ErrorKind::kEnvelopeViolation:
    case ErrorKind::kConvexityViolation:
    case ErrorKind::kSlopeOutOfRange:
    case ErrorKind::kDomainError:
    case ErrorKind::kAdmissibilityError:
      return kInvalidFunction;
    case ErrorKind::kInvariantViolation:
      return kInvariantViolation;
    default:
      return kIoOrParse;
  }
}

std::vector<FigureRow> FigureData(int grid_points) {
  if (grid_points < 2) {
    throw Error(ErrorKind::kDomainError, "figure grid needs >= 2 points");
  }
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double tau = static_cast<double>(i) / (grid_points - 1);
    const BoundCurves curves = ComputeBoundCurves(tau);
    // tau(T_{1/2,y}) = (1-y)/y, so y = 1/(1+tau) lands on this grid point.
    const PiecewiseLinearPickands t = Triangular(0.5, 1.0 / (1.0 + tau));
    rows.push_back({tau, curves.hl_lower, curves.hl_upper, curves.sharp_lower,
                    Tau(t), Rho(t)});
  }
  return rows;
}

void WriteFigureCsv(std::ostream& out, const std::vector<FigureRow>& rows) {
  out << "tau,hl_lower,hl_upper,sharp_lower,triangular_tau,triangular_rho\n";
  for (const FigureRow& r : rows) {
    out << FormatCsvNumber(r.tau) << ',' << FormatCsvNumber(r.hl_lower) << ','
        << FormatCsvNumber(r.hl_upper) << ','
        << FormatCsvNumber(r.sharp_lower) << ','
        << FormatCsvNumber(r.triangular_tau) << ','
        << FormatCsvNumber(r.triangular_rho) << '\n';
  }
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Extreme-value copulas from piecewise-linear Pickands "
               "dependence functions"};
  app.name("evcopula");
  app.require_subcommand(1, 1);
  Options o;

  auto add_seed = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (required)")->required();
  };
  auto add_workers = [&o](CLI::App* sub) {
    sub->add_option("--workers", o.workers,
                    "Worker threads; output does not depend on this")
        ->check(CLI::PositiveNumber);
  };
  const std::string input_help =
      "Function as a JSON file, '-' for stdin, or an inline JSON object";

  auto* validate = app.add_subcommand("validate", "Check a Pickands function");
  validate->add_option("input", o.input, input_help)->required();

  auto* measures = app.add_subcommand(
      "measures", "Kendall's tau and Spearman's rho of a Pickands function");
  measures->add_option("input", o.input, input_help);
  measures
      ->add_option("--family", o.family,
                   "Smooth family instead of an input file")
      ->check(CLI::IsMember({"gumbel", "mixture"}));
  measures->add_option("--param", o.parameter,
                       "Family parameter (Gumbel theta >= 1, mixture weight)");
  measures->add_option("--tol", o.tolerance, "Refinement tolerance")
      ->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand(
      "bounds", "Measures plus slack above the lower bound curves");
  bounds->add_option("input", o.input, input_help)->required();

  auto* triangular = app.add_subcommand(
      "triangular", "Single-vertex Pickands function through (x1, y1)");
  triangular->add_option("--x1", o.x1, "Vertex abscissa in (0,1)")
      ->required();
  triangular->add_option("--y1", o.y1, "Vertex height in the envelope")
      ->required();

  auto* lemmas = app.add_subcommand(
      "lemmas", "Randomized checks of the vertex-insertion inequalities");
  lemmas->add_option("--trials", o.trials, "Number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  add_seed(lemmas);
  add_workers(lemmas);

  auto* region = app.add_subcommand(
      "region", "Scan the tau-rho region; CSV tau,rho,slack_sharp,slack_hl");
  region->add_option("--count", o.count, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  region->add_option("--max-vertices", o.max_vertices,
                     "Vertex limit for random functions")
      ->check(CLI::NonNegativeNumber);
  add_seed(region);
  add_workers(region);
  region->add_option("--out", o.out, "CSV output path ('-' for stdout)");

  auto* figure = app.add_subcommand(
      "figure-data",
      "Bound curves (Hutchinson-Lai lower and upper, sharp lower) on a tau "
      "grid plus the triangular-family trace. The boundary of the tau-rho "
      "region of the full copula class is not emitted.");
  figure->add_option("--out", o.out, "CSV output path ('-' for stdout)");
  figure->add_option("--grid", o.grid, "Number of tau grid points")
      ->check(CLI::Range(2, 10'000'000));

  auto* sample = app.add_subcommand(
      "sample", "Draw pairs from the copula; CSV columns u,v");
  sample->add_option("input", o.input, input_help)->required();
  sample->add_option("--n", o.n, "Number of pairs")
      ->required()
      ->check(CLI::PositiveNumber);
  add_seed(sample);
  add_workers(sample);
  sample->add_option("--out", o.out, "CSV output path ('-' for stdout)");
  sample->add_flag("--no-header", o.no_header, "Omit the u,v header row");

  auto* gap = app.add_subcommand(
      "gap", "Maximum of 3 tau / (2 + tau) - tau over tau in [0,1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (*validate) {
      try {
        const PiecewiseLinearPickands a = LoadFunction(o.input);
        json j = PickandsToJson(a);
        j["valid"] = true;
        out << j.dump() << '\n';
        return kOk;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kParseError) throw;
        out << json{{"valid", false},
                    {"error", ErrorKindName(e.kind())},
                    {"message", e.what()}}
                   .dump()
            << '\n';
        return ExitCodeFor(e.kind());
      }
    }
    if (*measures) {
      if (!o.family.empty()) {
        if (!o.input.empty()) {
          err << "measures: give either an input function or --family\n";
          return kIoOrParse;
        }
        const DependenceEvaluator f =
            o.family == "gumbel" ? DependenceEvaluator::Gumbel(o.parameter)
                                 : DependenceEvaluator::Mixture(o.parameter);
        out << MeasuresJson(MeasuresGeneral(f, o.tolerance)).dump() << '\n';
        return kOk;
      }
      if (o.input.empty()) {
        err << "measures: an input function or --family is required\n";
        return kIoOrParse;
      }
      out << MeasuresJson(ExactMeasures(LoadFunction(o.input))).dump()
          << '\n';
      return kOk;
    }
    if (*bounds) {
      const RegionSample s = CheckSharpInequality(LoadFunction(o.input));
      json j = SampleJson(s);
      j.erase("function");
      const BoundCurves curves = ComputeBoundCurves(s.tau);
      j["hl_lower"] = curves.hl_lower;
      j["hl_upper"] = curves.hl_upper;
      j["sharp_lower"] = curves.sharp_lower;
      out << j.dump() << '\n';
      return kOk;
    }
    if (*triangular) {
      out << SampleJson(CheckSharpInequality(Triangular(o.x1, o.y1),
                                             "triangular"))
                 .dump()
          << '\n';
      return kOk;
    }
    if (*lemmas) {
      const LemmaReport report = LemmaSuite(o.trials, *o.seed, o.workers);
      out << ReportJson(report).dump(2) << '\n';
      return report.passed() ? kOk : kInvariantViolation;
    }
    if (*region) {
      const std::vector<RegionSample> samples =
          RegionScan(o.count, o.max_vertices, *o.seed, o.workers);
      long violations = 0;
      double min_sharp = std::numeric_limits<double>::infinity();
      double min_hl = std::numeric_limits<double>::infinity();
      for (const RegionSample& s : samples) {
        if (s.violation()) ++violations;
        min_sharp = std::min(min_sharp, s.slack_sharp);
        min_hl = std::min(min_hl, s.slack_hl);
      }
      Sink sink(o.out, out);
      WriteRegionCsv(sink.get(), samples);
      if (o.out != "-") {
        out << json{{"count", samples.size()},
                    {"violations", violations},
                    {"min_slack_sharp", min_sharp},
                    {"min_slack_hl", min_hl},
                    {"out", o.out}}
                   .dump()
            << '\n';
      }
      if (violations > 0) {
        err << "region: " << violations << " samples violate a lower bound\n";
        return kInvariantViolation;
      }
      return kOk;
    }
    if (*figure) {
      Sink sink(o.out, out);
      WriteFigureCsv(sink.get(), FigureData(o.grid));
      return kOk;
    }
    if (*sample) {
      const PiecewiseLinearPickands a = LoadFunction(o.input);
      const std::vector<SamplePair> pairs = Sample(a, o.n, *o.seed, o.workers);
      Sink sink(o.out, out);
      WriteSampleCsv(sink.get(), pairs, !o.no_header);
      return kOk;
    }
    if (*gap) {
      const GapMaximum g = MaximizeGap();
      out << json{{"argmax", g.argmax},
                  {"max", g.max},
                  {"argmax_closed_form", std::sqrt(6.0) - 2.0},
                  {"max_closed_form", 5.0 - 2.0 * std::sqrt(6.0)}}
                 .dump()
          << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    err << app.get_subcommands().front()->get_name() << ": " << e.what()
        << '\n';
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  }
  return kIoOrParse;
}

}  // namespace evc::cli
