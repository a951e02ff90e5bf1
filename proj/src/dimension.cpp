#include "fraclab/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "fraclab/error.hpp"
#include "fraclab/parallel.hpp"

namespace fraclab {

const char* mode_name(DimensionMode mode) {
  switch (mode) {
    case DimensionMode::ls:
      return "ls";
    case DimensionMode::liminf:
      return "liminf";
    case DimensionMode::limsup:
      return "limsup";
  }
  return "ls";
}

DimensionMode parse_mode(const std::string& name) {
  if (name == "ls") return DimensionMode::ls;
  if (name == "liminf") return DimensionMode::liminf;
  if (name == "limsup") return DimensionMode::limsup;
  throw ContractViolation("unknown dimension mode '" + name + "' (expected ls, liminf or limsup)");
}

CountSeries::CountSeries(std::vector<CountSample> samples) {
  for (const auto& s : samples) append(s.r, s.count);
}

void CountSeries::append(int r, std::uint64_t count) {
  require(count >= 1, "count series entries must be >= 1");
  require(samples_.empty() || r > samples_.back().r, "count series precisions must increase");
  samples_.push_back({r, count});
}

nlohmann::json DimensionEstimate::to_json() const {
  return {{"slope", slope}, {"intercept", intercept}, {"rms", rms},
          {"r_min", r_min}, {"r_max", r_max},         {"mode", mode_name(mode)}};
}

namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
};

double residual_rms(const std::vector<double>& x, const std::vector<double>& y, Line line) {
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = y[i] - (line.slope * x[i] + line.intercept);
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(x.size()));
}

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  Line line;
  line.slope = sxy / sxx;
  line.intercept = my - line.slope * mx;
  return line;
}

}  // namespace

DimensionEstimate box_dimension(const CountSeries& series, DimensionWindow window, DimensionMode mode) {
  require(window.r_min < window.r_max, "dimension window needs r_min < r_max");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& s : series.samples()) {
    if (s.r < window.r_min || s.r > window.r_max) continue;
    x.push_back(s.r);
    y.push_back(std::log2(static_cast<double>(s.count)));
  }
  require(x.size() >= 4, "dimension window holds " + std::to_string(x.size()) +
                             " samples; at least 4 are needed");

  DimensionEstimate est;
  est.r_min = static_cast<int>(x.front());
  est.r_max = static_cast<int>(x.back());
  est.mode = mode;

  const Line ls = least_squares(x, y);
  Line line = ls;
  if (mode != DimensionMode::ls) {
    double lo = ls.slope;
    double hi = ls.slope;
    for (std::size_t i = x.size() / 2; i < x.size(); ++i) {
      if (i == 0) continue;
      const double chord = (y[i] - y[0]) / (x[i] - x[0]);
      lo = std::min(lo, chord);
      hi = std::max(hi, chord);
    }
    line.slope = mode == DimensionMode::liminf ? lo : hi;
    line.intercept = y[0] - line.slope * x[0];
  }
  est.slope = line.slope;
  est.intercept = line.intercept;
  est.rms = residual_rms(x, y, line);
  return est;
}

CountSeries cover_count_series(const IfsSpec& ifs, DimensionWindow window, const CoverLimits& limits) {
  require(window.r_min >= 0 && window.r_min <= window.r_max, "invalid dimension window");
  CountSeries series;
  for (int r = window.r_min; r <= window.r_max; ++r) series.append(r, count_cover(ifs, r, limits));
  return series;
}

std::vector<CountSeries> projection_count_series(const IfsSpec& ifs,
                                                 const std::vector<Direction>& directions,
                                                 DimensionWindow window, const CoverLimits& limits) {
  require(window.r_min >= 0 && window.r_min <= window.r_max, "invalid dimension window");
  for (const auto& e : directions) {
    require(e.dimension() == ifs.dimension(), "projection direction dimension mismatch");
  }
  std::vector<CountSeries> out(directions.size());
  for (int r = window.r_min; r <= window.r_max; ++r) {
    const CoverColumns columns(generate_cover(ifs, r, limits));
    std::vector<std::uint64_t> counts(directions.size());
    parallel_for(directions.size(), [&](std::size_t i) { counts[i] = count_projection(columns, directions[i]); });
    for (std::size_t i = 0; i < directions.size(); ++i) out[i].append(r, counts[i]);
  }
  return out;
}

DimensionEstimate projection_dimension(const IfsSpec& ifs, const Direction& e, DimensionWindow window,
                                       DimensionMode mode, const CoverLimits& limits) {
  const auto series = projection_count_series(ifs, {e}, window, limits);
  return box_dimension(series.front(), window, mode);
}

}  // namespace fraclab
