#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclab/fractals.hpp"
#include "fraclab/geometry.hpp"

namespace fraclab {

enum class DimensionMode { ls, liminf, limsup };

const char* mode_name(DimensionMode mode);
// Throws ContractViolation for anything but "ls", "liminf", "limsup".
DimensionMode parse_mode(const std::string& name);

struct CountSample {
  int r = 0;
  std::uint64_t count = 1;
};

/// (r, N_r) pairs with r strictly increasing and N_r >= 1.
class CountSeries {
 public:
  CountSeries() = default;
  explicit CountSeries(std::vector<CountSample> samples);

  void append(int r, std::uint64_t count);
  const std::vector<CountSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<CountSample> samples_;
};

struct DimensionWindow {
  int r_min = 8;
  int r_max = 20;
};

struct DimensionEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  int r_min = 0;
  int r_max = 0;
  DimensionMode mode = DimensionMode::ls;

  nlohmann::json to_json() const;
};

// ls: least-squares slope of log2 N_r against r over the window.
// liminf / limsup: min / max of the chord slopes from r_min to each r in the
// tail (last half) of the window, clamped so that liminf <= ls <= limsup.
// Throws ContractViolation when the window holds fewer than 4 samples.
DimensionEstimate box_dimension(const CountSeries& series, DimensionWindow window,
                                DimensionMode mode = DimensionMode::ls);

// N_r = |cover(ifs, r)| for r in the window.
CountSeries cover_count_series(const IfsSpec& ifs, DimensionWindow window,
                               const CoverLimits& limits = {});

// For each direction, N_r = |project_cover(cover(ifs, r), e)|. Covers are built
// one precision at a time and shared across directions.
std::vector<CountSeries> projection_count_series(const IfsSpec& ifs,
                                                 const std::vector<Direction>& directions,
                                                 DimensionWindow window,
                                                 const CoverLimits& limits = {});

DimensionEstimate projection_dimension(const IfsSpec& ifs, const Direction& e, DimensionWindow window,
                                       DimensionMode mode = DimensionMode::ls,
                                       const CoverLimits& limits = {});

}  // namespace fraclab
