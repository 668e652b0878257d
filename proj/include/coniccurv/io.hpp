#pragma once

#include <string>
#include <vector>

#include "coniccurv/benchmark.hpp"
#include "coniccurv/curvature.hpp"
#include "coniccurv/lcurve.hpp"
#include "coniccurv/polyline.hpp"
#include "coniccurv/tangent.hpp"

namespace coniccurv {

enum class OutputFormat { Csv, Json };

/// Locale-independent decimal formatting with 17 significant digits
/// (round-trip safe); NaN prints as "nan".
std::string format_double(double v);

/// Points CSV: optional `x,y` header, one `x,y` row per point, LF or CRLF.
/// Malformed rows raise MalformedInput naming the 1-based line.
Polyline read_points_csv(const std::string& path, bool closed = false);
Polyline parse_points_csv(const std::string& text, bool closed = false);

/// L-curve CSV with mandatory header `alpha,residual_norm,solution_norm`.
/// Rows are sorted by alpha when every alpha is finite; otherwise file
/// order is kept (NaN alphas are fixture sentinels).
std::vector<LCurveSample> read_lcurve_csv(const std::string& path);
std::vector<LCurveSample> parse_lcurve_csv(const std::string& text);

std::string write_points_csv(const Polyline& pl);

std::string write_curvature(const std::vector<CurvatureRecord>& records, OutputFormat format);
std::string write_tangents(const TangentField& tf, OutputFormat format);
std::string write_pieces(const std::vector<ConvexPiece>& pieces, OutputFormat format);
std::string write_corner(const CornerReport& report, bool all_maxima, OutputFormat format);
std::string write_accuracy(const std::vector<AccuracyRow>& rows, OutputFormat format);
std::string write_order(const OrderExperimentResult& conic, const OrderExperimentResult& coniccurv,
                        OutputFormat format);
std::string write_energy(double stretch, double bending, int levels, OutputFormat format);

}  // namespace coniccurv
