#include "fraclab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fraclab/error.hpp"

namespace fraclab {

int ceil_precision(double r) {
  require(std::isfinite(r) && r >= 0.0, "precision must be a finite nonnegative number");
  return static_cast<int>(std::ceil(r));
}

DyadicPoint::DyadicPoint(std::vector<std::int64_t> mantissas, int precision)
    : mantissas_(std::move(mantissas)), precision_(precision) {
  require(!mantissas_.empty(), "DyadicPoint needs dimension >= 1");
  require(precision_ >= 0, "DyadicPoint precision must be >= 0");
}

DyadicPoint DyadicPoint::origin(std::size_t dimension) {
  return DyadicPoint(std::vector<std::int64_t>(dimension, 0), 0);
}

DyadicPoint DyadicPoint::round(std::span<const double> x, int precision) {
  std::vector<std::int64_t> m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    m[i] = static_cast<std::int64_t>(std::floor(std::ldexp(x[i], precision) + 0.5));
  }
  return DyadicPoint(std::move(m), precision);
}

DyadicPoint DyadicPoint::normalized() const {
  DyadicPoint out = *this;
  while (out.precision_ > 0 &&
         std::all_of(out.mantissas_.begin(), out.mantissas_.end(),
                     [](std::int64_t m) { return (m & 1) == 0; })) {
    for (auto& m : out.mantissas_) m /= 2;
    --out.precision_;
  }
  return out;
}

DyadicPoint DyadicPoint::refined_to(int precision) const {
  require(precision >= precision_, "refined_to cannot coarsen");
  DyadicPoint out = *this;
  const int shift = precision - precision_;
  for (auto& m : out.mantissas_) m *= (std::int64_t{1} << shift);
  out.precision_ = precision;
  return out;
}

RealVector DyadicPoint::to_real() const {
  RealVector x(mantissas_.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = coordinate(i);
  return x;
}

double DyadicPoint::coordinate(std::size_t i) const {
  return std::ldexp(static_cast<double>(mantissas_[i]), -precision_);
}

DyadicPoint DyadicPoint::operator+(const DyadicPoint& other) const {
  require(dimension() == other.dimension(), "DyadicPoint dimension mismatch");
  const int p = std::max(precision_, other.precision_);
  DyadicPoint a = refined_to(p);
  const DyadicPoint b = other.refined_to(p);
  for (std::size_t i = 0; i < a.mantissas_.size(); ++i) a.mantissas_[i] += b.mantissas_[i];
  return a;
}

DyadicPoint DyadicPoint::operator-(const DyadicPoint& other) const {
  require(dimension() == other.dimension(), "DyadicPoint dimension mismatch");
  const int p = std::max(precision_, other.precision_);
  DyadicPoint a = refined_to(p);
  const DyadicPoint b = other.refined_to(p);
  for (std::size_t i = 0; i < a.mantissas_.size(); ++i) a.mantissas_[i] -= b.mantissas_[i];
  return a;
}

bool DyadicPoint::operator==(const DyadicPoint& other) const {
  if (dimension() != other.dimension()) return false;
  const DyadicPoint a = normalized();
  const DyadicPoint b = other.normalized();
  return a.precision_ == b.precision_ && a.mantissas_ == b.mantissas_;
}

DyadicPoint DyadicPoint::concat(const DyadicPoint& x, const DyadicPoint& y) {
  const int p = std::max(x.precision_, y.precision_);
  auto m = x.refined_to(p).mantissas_;
  const auto& tail = y.refined_to(p).mantissas_;
  m.insert(m.end(), tail.begin(), tail.end());
  return DyadicPoint(std::move(m), p);
}

std::string DyadicPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < mantissas_.size(); ++i) {
    if (i) os << ", ";
    os << mantissas_[i];
  }
  os << ")*2^-" << precision_;
  return os.str();
}

std::size_t DyadicPointHash::operator()(const DyadicPoint& p) const {
  const DyadicPoint n = p.normalized();
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n.precision());
  for (std::int64_t m : n.mantissas()) {
    h ^= static_cast<std::uint64_t>(m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Direction::Direction(RealVector components) : components_(std::move(components)) {
  require(!components_.empty(), "Direction needs dimension >= 1");
  require(std::abs(norm(components_) - 1.0) <= kNormTolerance, "Direction must have unit norm");
}

Direction Direction::normalize(RealVector v) {
  const double len = norm(v);
  require(len > 0.0 && std::isfinite(len), "cannot normalize a zero vector");
  for (auto& c : v) c /= len;
  return Direction(std::move(v));
}

Direction Direction::from_angle(double theta) {
  return Direction::normalize({std::cos(theta), std::sin(theta)});
}

double dot(const Direction& e, std::span<const double> x) {
  require(e.dimension() == x.size(), "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += e[i] * x[i];
  return s;
}

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double distance(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

LogDistance log_distance(std::span<const double> z, std::span<const double> w) {
  const double d = distance(z, w);
  if (d == 0.0) return {std::numeric_limits<double>::infinity()};
  return {-std::log2(d)};
}

RealVector nearest_on_level_set(std::span<const double> p, const Direction& e, double q) {
  const double shift = q - dot(e, p);
  RealVector w(p.begin(), p.end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += shift * e[i];
  return w;
}

Direction sample_direction(std::size_t n, std::mt19937_64& rng) {
  require(n >= 2, "sample_direction needs n >= 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    RealVector v(n);
    for (auto& c : v) c = gauss(rng);
    if (norm(v) > 1e-300) return Direction::normalize(std::move(v));
  }
}

Direction sample_direction(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_direction(n, rng);
}

}  // namespace fraclab
