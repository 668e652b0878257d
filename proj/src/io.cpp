#include "coniccurv/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace coniccurv {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.pop_back();
  }
  return fields;
}

double parse_number(const std::string& s, std::size_t line_no) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || end != begin + s.size())
    throw Error(ErrorCode::MalformedInput,
                "line " + std::to_string(line_no) + ": not a number: '" + s + "'");
  return v;
}

}  // namespace

Polyline parse_points_csv(const std::string& text, bool closed) {
  std::vector<PlanePoint> pts;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    if (i == 0 && line.find_first_not_of("xy, \t") == std::string::npos) continue;  // header
    const auto f = split_fields(line);
    if (f.size() != 2)
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(i + 1) + ": expected 2 fields, got " +
                      std::to_string(f.size()));
    pts.push_back({parse_number(f[0], i + 1), parse_number(f[1], i + 1)});
  }
  return Polyline(std::move(pts), closed);
}

Polyline read_points_csv(const std::string& path, bool closed) {
  return parse_points_csv(slurp(path), closed);
}

std::vector<LCurveSample> parse_lcurve_csv(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || split_fields(lines[0]) !=
                           std::vector<std::string>{"alpha", "residual_norm", "solution_norm"})
    throw Error(ErrorCode::MalformedInput,
                "l-curve csv: expected header 'alpha,residual_norm,solution_norm'");
  std::vector<LCurveSample> samples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split_fields(lines[i]);
    if (f.size() != 3)
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(i + 1) + ": expected 3 fields, got " +
                      std::to_string(f.size()));
    LCurveSample s{parse_number(f[0], i + 1), parse_number(f[1], i + 1),
                   parse_number(f[2], i + 1)};
    if (!(s.residual_norm > 0.0) || !(s.solution_norm > 0.0))
      throw Error(ErrorCode::NonPositiveNorm,
                  "line " + std::to_string(i + 1) + ": norms must be positive");
    samples.push_back(s);
  }
  const bool all_alpha = std::all_of(samples.begin(), samples.end(),
                                     [](const LCurveSample& s) { return std::isfinite(s.alpha); });
  if (all_alpha)
    std::sort(samples.begin(), samples.end(),
              [](const LCurveSample& a, const LCurveSample& b) { return a.alpha < b.alpha; });
  return samples;
}

std::vector<LCurveSample> read_lcurve_csv(const std::string& path) {
  return parse_lcurve_csv(slurp(path));
}

std::string write_points_csv(const Polyline& pl) {
  std::string out = "x,y\n";
  for (const auto& p : pl.points) out += format_double(p.x) + "," + format_double(p.y) + "\n";
  return out;
}

namespace {

// Minimal JSON emitter: all payloads are flat records of numbers, small
// strings, and integers. NaN maps to null.
std::string jnum(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

struct JsonRecords {
  std::string command;
  std::string records;  // comma-joined objects

  std::string str() const {
    return "{\"schema_version\":1,\"command\":\"" + command + "\",\"records\":[" + records + "]}\n";
  }
};

}  // namespace

std::string write_curvature(const std::vector<CurvatureRecord>& records, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "index,kappa_left,kappa_right,kappa_avg,sign,status\n";
    for (const auto& r : records) {
      out += std::to_string(r.index) + "," + format_double(r.kappa_left) + "," +
             format_double(r.kappa_right) + "," + format_double(r.kappa_avg) + "," +
             std::to_string(r.sign) + "," + to_string(r.status) + "\n";
    }
    return out;
  }
  JsonRecords j{"curvature", ""};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    j.records += std::string(i ? "," : "") + "{\"index\":" + std::to_string(r.index) +
                 ",\"kappa_left\":" + jnum(r.kappa_left) +
                 ",\"kappa_right\":" + jnum(r.kappa_right) +
                 ",\"kappa_avg\":" + jnum(r.kappa_avg) + ",\"sign\":" + std::to_string(r.sign) +
                 ",\"status\":\"" + to_string(r.status) + "\"}";
  }
  return j.str();
}

std::string write_tangents(const TangentField& tf, OutputFormat format) {
  auto status_name = [](TangentStatus s) {
    switch (s) {
      case TangentStatus::Ok: return "Ok";
      case TangentStatus::Degenerate: return "Degenerate";
      case TangentStatus::NotEstimated: return "NotEstimated";
    }
    return "NotEstimated";
  };
  if (format == OutputFormat::Csv) {
    std::string out = "index,a,b,c,status,reduced\n";
    for (std::size_t i = 0; i < tf.size(); ++i) {
      out += std::to_string(i) + "," + format_double(tf.lines[i].a) + "," +
             format_double(tf.lines[i].b) + "," + format_double(tf.lines[i].c) + "," +
             status_name(tf.status[i]) + "," + (tf.reduced[i] ? "1" : "0") + "\n";
    }
    return out;
  }
  JsonRecords j{"tangents", ""};
  for (std::size_t i = 0; i < tf.size(); ++i) {
    j.records += std::string(i ? "," : "") + "{\"index\":" + std::to_string(i) +
                 ",\"a\":" + jnum(tf.lines[i].a) + ",\"b\":" + jnum(tf.lines[i].b) +
                 ",\"c\":" + jnum(tf.lines[i].c) + ",\"status\":\"" + status_name(tf.status[i]) +
                 "\",\"reduced\":" + (tf.reduced[i] ? "true" : "false") + "}";
  }
  return j.str();
}

std::string write_pieces(const std::vector<ConvexPiece>& pieces, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "piece,start_index,end_index,turn_sign\n";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      out += std::to_string(i) + "," + std::to_string(pieces[i].start_index) + "," +
             std::to_string(pieces[i].end_index) + "," + std::to_string(pieces[i].turn_sign) + "\n";
    }
    return out;
  }
  JsonRecords j{"split", ""};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    j.records += std::string(i ? "," : "") + "{\"piece\":" + std::to_string(i) +
                 ",\"start_index\":" + std::to_string(pieces[i].start_index) +
                 ",\"end_index\":" + std::to_string(pieces[i].end_index) +
                 ",\"turn_sign\":" + std::to_string(pieces[i].turn_sign) + "}";
  }
  return j.str();
}

std::string write_corner(const CornerReport& report, bool all_maxima, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "corner_index,corner_alpha\n";
    out += std::to_string(report.corner_index) + "," + format_double(report.corner_alpha) + "\n";
    out += "index,kappa,local_max\n";
    for (const auto& [idx, kappa] : report.curvatures) {
      const bool is_max =
          all_maxima ? std::find(report.local_maxima.begin(), report.local_maxima.end(), idx) !=
                           report.local_maxima.end()
                     : idx == report.corner_index;
      out += std::to_string(idx) + "," + format_double(kappa) + "," + (is_max ? "1" : "0") + "\n";
    }
    return out;
  }
  JsonRecords j{"corner", ""};
  std::string maxima;
  for (std::size_t i = 0; i < report.local_maxima.size(); ++i)
    maxima += std::string(i ? "," : "") + std::to_string(report.local_maxima[i]);
  for (std::size_t i = 0; i < report.curvatures.size(); ++i) {
    j.records += std::string(i ? "," : "") + "{\"index\":" + std::to_string(report.curvatures[i].first) +
                 ",\"kappa\":" + jnum(report.curvatures[i].second) + "}";
  }
  return "{\"schema_version\":1,\"command\":\"corner\",\"corner_index\":" +
         std::to_string(report.corner_index) + ",\"corner_alpha\":" + jnum(report.corner_alpha) +
         ",\"local_maxima\":[" + maxima + "],\"records\":[" + j.records + "]}\n";
}

std::string write_accuracy(const std::vector<AccuracyRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "curve,circle,poly4,conic,coniccurv\n";
    for (const auto& r : rows) {
      out += r.curve + "," + format_double(r.circle) + "," + format_double(r.poly4) + "," +
             format_double(r.conic) + "," + format_double(r.coniccurv) + "\n";
    }
    return out;
  }
  JsonRecords j{"bench-accuracy", ""};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    j.records += std::string(i ? "," : "") + "{\"curve\":\"" + r.curve +
                 "\",\"circle\":" + jnum(r.circle) + ",\"poly4\":" + jnum(r.poly4) +
                 ",\"conic\":" + jnum(r.conic) + ",\"coniccurv\":" + jnum(r.coniccurv) + "}";
  }
  return j.str();
}

std::string write_order(const OrderExperimentResult& conic, const OrderExperimentResult& coniccurv,
                        OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "k,h,cond_conic,re_conic,cond_coniccurv,re_coniccurv\n";
    for (std::size_t k = 0; k < conic.samples.size(); ++k) {
      out += std::to_string(k) + "," + format_double(conic.samples[k].h) + "," +
             format_double(conic.samples[k].cond) + "," + format_double(conic.samples[k].rel_error) +
             "," + format_double(coniccurv.samples[k].cond) + "," +
             format_double(coniccurv.samples[k].rel_error) + "\n";
    }
    out += "slope,," + format_double(conic.cond_slope) + "," + format_double(conic.re_slope) + "," +
           format_double(coniccurv.cond_slope) + "," + format_double(coniccurv.re_slope) + "\n";
    return out;
  }
  JsonRecords j{"bench-order", ""};
  for (std::size_t k = 0; k < conic.samples.size(); ++k) {
    j.records += std::string(k ? "," : "") + "{\"k\":" + std::to_string(k) +
                 ",\"h\":" + jnum(conic.samples[k].h) + ",\"cond_conic\":" +
                 jnum(conic.samples[k].cond) + ",\"re_conic\":" + jnum(conic.samples[k].rel_error) +
                 ",\"cond_coniccurv\":" + jnum(coniccurv.samples[k].cond) +
                 ",\"re_coniccurv\":" + jnum(coniccurv.samples[k].rel_error) + "}";
  }
  return "{\"schema_version\":1,\"command\":\"bench-order\",\"records\":[" + j.records +
         "],\"slopes\":{\"cond_conic\":" + jnum(conic.cond_slope) +
         ",\"re_conic\":" + jnum(conic.re_slope) +
         ",\"cond_coniccurv\":" + jnum(coniccurv.cond_slope) +
         ",\"re_coniccurv\":" + jnum(coniccurv.re_slope) + "}}\n";
}

std::string write_energy(double stretch, double bending, int levels, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    return "S,E,levels\n" + format_double(stretch) + "," + format_double(bending) + "," +
           std::to_string(levels) + "\n";
  }
  return "{\"schema_version\":1,\"command\":\"energy\",\"S\":" + jnum(stretch) +
         ",\"E\":" + jnum(bending) + ",\"levels\":" + std::to_string(levels) + "}\n";
}

}  // namespace coniccurv
