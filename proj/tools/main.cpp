// Command-line front end: curvature estimation, tangent/convexity
// diagnostics, the accuracy and convergence benchmarks, L-curve corner
// detection, and subdivision energies.
//
// Exit codes: 0 success, 1 usage error, 2 data/degeneracy error.

#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coniccurv/benchmark.hpp"
#include "coniccurv/convexity.hpp"
#include "coniccurv/curvature.hpp"
#include "coniccurv/energy.hpp"
#include "coniccurv/io.hpp"
#include "coniccurv/lcurve.hpp"

namespace cc = coniccurv;

namespace {

cc::OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return cc::OutputFormat::Csv;
  if (f == "json") return cc::OutputFormat::Json;
  throw CLI::ValidationError("--format must be csv or json");
}

// Tangent estimation honoring the convex decomposition: each piece is
// processed on its own, overlapping estimates keep the better status.
cc::TangentField piecewise_tangents(const cc::Polyline& pl, bool assume_convex) {
  if (assume_convex || pl.closed || pl.size() < 3) return cc::tangent_field(pl);
  cc::TangentField out;
  out.lines.resize(pl.size());
  out.status.assign(pl.size(), cc::TangentStatus::NotEstimated);
  out.reduced.assign(pl.size(), false);
  for (const auto& piece : cc::split_convex(pl)) {
    std::vector<cc::PlanePoint> sub(pl.points.begin() + static_cast<std::ptrdiff_t>(piece.start_index),
                                    pl.points.begin() + static_cast<std::ptrdiff_t>(piece.end_index) + 1);
    const cc::TangentField tf = cc::tangent_field(cc::Polyline(std::move(sub), false));
    for (std::size_t j = 0; j < tf.size(); ++j) {
      const std::size_t g = piece.start_index + j;
      if (out.status[g] == cc::TangentStatus::Ok) continue;
      if (tf.status[j] == cc::TangentStatus::NotEstimated &&
          out.status[g] != cc::TangentStatus::NotEstimated)
        continue;
      out.lines[g] = tf.lines[j];
      out.status[g] = tf.status[j];
      out.reduced[g] = tf.reduced[j];
    }
  }
  return out;
}

const cc::BenchCurve& curve_by_name(const std::string& name) {
  for (const auto& cv : cc::bench_curves()) {
    std::string lowered;
    for (char ch : cv.name) lowered += static_cast<char>(std::tolower(ch));
    if (lowered.rfind(name, 0) == 0 || cv.name == name) return cv;
  }
  throw cc::Error(cc::ErrorCode::MalformedInput, "unknown benchmark curve: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivative-free planar curvature estimation from ordered point samples"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global options after the subcommand name
  std::string format = "csv";
  app.add_option("--format", format, "Output format: csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");

  std::string input_path;
  bool closed = false;
  bool assume_convex = false;
  bool insert_inflections = false;
  std::string piece_policy = "reduced";

  auto add_points_options = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "Points CSV (x,y rows)")->required();
    cmd->add_flag("--closed", closed, "Treat the polyline as closed");
    cmd->add_flag("--assume-convex", assume_convex, "Skip convex splitting");
  };

  auto* curvature_cmd = app.add_subcommand("curvature", "Per-point curvature estimates");
  add_points_options(curvature_cmd);
  curvature_cmd->add_option("--piece-policy", piece_policy,
                            "Tangents for pieces with <5 points: reduced|strict")
      ->capture_default_str()
      ->check(CLI::IsMember({"reduced", "strict"}));
  curvature_cmd->add_flag("--insert-inflections", insert_inflections,
                          "Insert inflection-edge midpoints before processing");

  auto* tangents_cmd = app.add_subcommand("tangents", "Per-point tangent lines");
  add_points_options(tangents_cmd);

  auto* split_cmd = app.add_subcommand("split", "Convex sub-polygon decomposition");
  split_cmd->add_option("input", input_path, "Points CSV (x,y rows)")->required();

  bool all_maxima = false;
  bool no_assume_convex = false;
  auto* corner_cmd = app.add_subcommand("corner", "L-curve corner detection");
  corner_cmd->add_option("input", input_path, "L-curve CSV (alpha,residual_norm,solution_norm)")
      ->required();
  corner_cmd->add_flag("--all-maxima", all_maxima, "Mark every strict local curvature maximum");
  corner_cmd->add_flag("--no-assume-convex", no_assume_convex,
                       "Run convex splitting on the log-log polyline");

  app.add_subcommand("bench-accuracy", "Accuracy comparison on the seven benchmark curves");
  app.add_subcommand("bench-order", "Convergence-order and conditioning experiment");

  int levels = 4;
  std::string scheme_name = "four-point";
  std::string curve_name;
  double t0 = 0.0, t1 = 1.0;
  auto* energy_cmd = app.add_subcommand("energy", "Stretch and bending energy of a 3-point arc");
  energy_cmd->add_option("input", input_path, "Control polygon CSV (exactly 3 x,y rows)");
  energy_cmd->add_option("--levels", levels, "Subdivision depth j* in [2,12]")
      ->capture_default_str()
      ->check(CLI::Range(2, 12));
  energy_cmd->add_option("--scheme", scheme_name, "four-point | parametric")
      ->capture_default_str()
      ->check(CLI::IsMember({"four-point", "parametric"}));
  energy_cmd->add_option("--curve", curve_name,
                         "Benchmark curve for parametric refinement (e.g. ellipse)");
  energy_cmd->add_option("--t0", t0, "Arc start parameter (with --curve)");
  energy_cmd->add_option("--t1", t1, "Arc end parameter (with --curve)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const cc::OutputFormat fmt = parse_format(format);
    std::string report;

    if (curvature_cmd->parsed()) {
      cc::ProfileOptions opts;
      opts.assume_convex = assume_convex;
      opts.insert_inflections = insert_inflections;
      if (piece_policy == "strict") opts.piece_policy = cc::PiecePolicy::Strict;
      const cc::Polyline pl = cc::read_points_csv(input_path, closed);
      report = cc::write_curvature(cc::curvature_profile(pl, opts), fmt);
    } else if (tangents_cmd->parsed()) {
      const cc::Polyline pl = cc::read_points_csv(input_path, closed);
      report = cc::write_tangents(piecewise_tangents(pl, assume_convex), fmt);
    } else if (split_cmd->parsed()) {
      const cc::Polyline pl = cc::read_points_csv(input_path, false);
      report = cc::write_pieces(cc::split_convex(pl), fmt);
    } else if (corner_cmd->parsed()) {
      const auto samples = cc::read_lcurve_csv(input_path);
      cc::CornerOptions copt;
      copt.assume_convex = !no_assume_convex;
      copt.all_maxima = all_maxima;
      report = cc::write_corner(cc::find_corner(samples, copt), all_maxima, fmt);
    } else if (app.get_subcommand("bench-accuracy")->parsed()) {
      report = cc::write_accuracy(cc::run_table2(), fmt);
    } else if (app.get_subcommand("bench-order")->parsed()) {
      const auto [conic, coniccurv] = cc::run_order_experiment();
      report = cc::write_order(conic, coniccurv, fmt);
    } else if (energy_cmd->parsed()) {
      std::unique_ptr<cc::SubdivisionScheme> scheme;
      std::array<cc::PlanePoint, 3> control;
      if (scheme_name == "parametric" || !curve_name.empty()) {
        if (curve_name.empty())
          throw cc::Error(cc::ErrorCode::MalformedInput, "--scheme parametric needs --curve");
        const auto& cv = curve_by_name(curve_name);
        const double tm = 0.5 * (t0 + t1);
        control = {cv.position(t0), cv.position(tm), cv.position(t1)};
        scheme = std::make_unique<cc::ExactParametricScheme>(cv.position,
                                                             std::vector<double>{t0, tm, t1});
      } else if (scheme_name == "four-point") {
        if (input_path.empty())
          throw cc::Error(cc::ErrorCode::MalformedInput, "energy: control polygon CSV required");
        const cc::Polyline pl = cc::read_points_csv(input_path, false);
        if (pl.size() != 3)
          throw cc::Error(cc::ErrorCode::MalformedInput, "energy: expected exactly 3 points");
        control = {pl.points[0], pl.points[1], pl.points[2]};
        scheme = std::make_unique<cc::FourPointScheme>();
      }
      const cc::EnergyReport rep = cc::energy(control, *scheme, levels);
      report = cc::write_energy(rep.stretch, rep.bending, rep.levels_used, fmt);
    }

    if (output_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) throw cc::Error(cc::ErrorCode::MalformedInput, "cannot open output: " + output_path);
      out << report;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
