#include <doctest.h>

#include <cmath>
#include <random>

#include "fraclab/dimension.hpp"
#include "fraclab/error.hpp"
#include "fraclab/fractals.hpp"
#include "fraclab/harness.hpp"

using namespace fraclab;

namespace {

CountSeries geometric_series(double base, int r0, int r1) {
  CountSeries s;
  for (int r = r0; r <= r1; ++r) s.append(r, static_cast<std::uint64_t>(std::llround(std::pow(base, r))));
  return s;
}

// Textbook normal-equation slope in long double, independent of the library's centred form.
long double oracle_slope(const CountSeries& s, DimensionWindow w) {
  long double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : s.samples()) {
    if (p.r < w.r_min || p.r > w.r_max) continue;
    const long double x = p.r, y = std::log2(static_cast<long double>(p.count));
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("exact power series give the exponent in every mode") {
  const auto s = geometric_series(3.0, 0, 20);
  for (auto mode : {DimensionMode::ls, DimensionMode::liminf, DimensionMode::limsup}) {
    const auto est = box_dimension(s, {8, 20}, mode);
    CHECK(est.slope == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(est.rms < 1e-9);
    CHECK(est.r_min == 8);
    CHECK(est.r_max == 20);
  }
}

TEST_CASE("least squares matches the normal-equation oracle on noisy series") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> jitter(0, 40);
  for (int trial = 0; trial < 50; ++trial) {
    CountSeries s;
    std::uint64_t n = 1;
    for (int r = 0; r <= 24; ++r) {
      n = n * 2 + static_cast<std::uint64_t>(jitter(rng)) * (r % 3);
      s.append(r, n);
    }
    const DimensionWindow w{3 + trial % 5, 18 + trial % 6};
    const auto ls = box_dimension(s, w, DimensionMode::ls);
    CHECK(ls.slope == doctest::Approx(static_cast<double>(oracle_slope(s, w))).epsilon(1e-10));
    const auto lo = box_dimension(s, w, DimensionMode::liminf);
    const auto hi = box_dimension(s, w, DimensionMode::limsup);
    CHECK(lo.slope <= ls.slope);
    CHECK(ls.slope <= hi.slope);
  }
}

TEST_CASE("oscillating growth separates liminf from limsup") {
  // Steps alternate between growth 4 and growth 1 in blocks of 3.
  CountSeries s;
  std::uint64_t n = 1;
  for (int r = 0; r <= 20; ++r) {
    s.append(r, n);
    n *= ((r / 3) % 2 == 0) ? 4 : 1;
  }
  const auto lo = box_dimension(s, {2, 20}, DimensionMode::liminf);
  const auto hi = box_dimension(s, {2, 20}, DimensionMode::limsup);
  CHECK(hi.slope - lo.slope > 0.1);
  CHECK(lo.slope >= 0.0);
  CHECK(hi.slope <= 2.0);
}

TEST_CASE("count series and window contracts") {
  CountSeries s;
  s.append(1, 2);
  CHECK_THROWS_AS(s.append(1, 4), ContractViolation);
  CHECK_THROWS_AS(s.append(2, 0), ContractViolation);
  s.append(2, 4);
  s.append(3, 8);
  CHECK_THROWS_AS(box_dimension(s, {1, 3}), ContractViolation);
  s.append(4, 16);
  CHECK(box_dimension(s, {1, 4}).slope == doctest::Approx(1.0));
  CHECK_THROWS_AS(parse_mode("median"), ContractViolation);
  CHECK(parse_mode("limsup") == DimensionMode::limsup);
}

TEST_CASE("cover count series agrees with materialized covers") {
  const IfsSpec ifs = catalog_lookup("cantor3").ifs;
  const auto series = cover_count_series(ifs, {4, 12});
  for (const auto& p : series.samples()) CHECK(p.count == generate_cover(ifs, p.r).size());
}

TEST_CASE("projection series agrees with projecting each cover") {
  const IfsSpec ifs = catalog_lookup("fourcorner").ifs;
  const auto dirs = sample_directions(2, 6, 3);
  const auto series = projection_count_series(ifs, dirs, {4, 10});
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    for (const auto& p : series[k].samples()) {
      CHECK(p.count == project_cover(generate_cover(ifs, p.r), dirs[k]).size());
    }
  }
  const auto one = projection_dimension(ifs, dirs[2], {4, 10});
  CHECK(one.slope == box_dimension(series[2], {4, 10}).slope);
}

TEST_CASE("ground-truth dimensions of catalog sets") {
  const DimensionWindow w{8, 20};
  CHECK(std::abs(box_dimension(cover_count_series(catalog_lookup("cantor3").ifs, w), w).slope -
                 std::log(2.0) / std::log(3.0)) < 0.05);
  CHECK(std::abs(box_dimension(cover_count_series(catalog_lookup("fourcorner").ifs, w), w).slope - 1.0) < 0.05);
  // Axis projection of the four-corner set is the ratio-1/4 Cantor set.
  const auto axis = projection_dimension(catalog_lookup("fourcorner").ifs, Direction(RealVector{1.0, 0.0}), w);
  CHECK(axis.slope == doctest::Approx(0.5).epsilon(0.02));
  // C x {0} projected along its own axis collapses to a point.
  const auto flat = projection_dimension(catalog_lookup("cantor3_line").ifs, Direction(RealVector{0.0, 1.0}), w);
  CHECK(std::abs(flat.slope) < 1e-9);
}

TEST_CASE("estimate json carries its fields") {
  const auto est = box_dimension(geometric_series(2.0, 0, 10), {2, 10}, DimensionMode::liminf);
  const auto j = est.to_json();
  CHECK(j.at("mode") == "liminf");
  CHECK(j.at("r_min") == 2);
  CHECK(j.at("slope").get<double>() == doctest::Approx(1.0));
}
