#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fraclab {

using RealVector = std::vector<double>;

// Nonintegral precisions round up to the next integer.
int ceil_precision(double r);

/// A point of R^n on the 2^-precision grid: coordinate i is mantissas[i] * 2^-precision.
///
/// Equality and hashing are on the denoted real vector, so (2, prec 2) == (1, prec 1).
class DyadicPoint {
 public:
  DyadicPoint() = default;
  DyadicPoint(std::vector<std::int64_t> mantissas, int precision);

  static DyadicPoint origin(std::size_t dimension);
  // Nearest grid point at the given precision (ties round half up).
  static DyadicPoint round(std::span<const double> x, int precision);

  std::size_t dimension() const { return mantissas_.size(); }
  int precision() const { return precision_; }
  const std::vector<std::int64_t>& mantissas() const { return mantissas_; }

  // Same point with the smallest precision that represents it exactly.
  DyadicPoint normalized() const;
  // Same point re-expressed at a finer precision (exact).
  DyadicPoint refined_to(int precision) const;

  RealVector to_real() const;
  double coordinate(std::size_t i) const;

  DyadicPoint operator+(const DyadicPoint& other) const;
  DyadicPoint operator-(const DyadicPoint& other) const;
  bool operator==(const DyadicPoint& other) const;

  // Coordinates concatenated, as the point (x, y) of R^{m+n}.
  static DyadicPoint concat(const DyadicPoint& x, const DyadicPoint& y);

  std::string to_string() const;

 private:
  std::vector<std::int64_t> mantissas_;
  int precision_ = 0;
};

struct DyadicPointHash {
  std::size_t operator()(const DyadicPoint& p) const;
};

/// Unit vector of R^n.
class Direction {
 public:
  static constexpr double kNormTolerance = 1e-12;

  // Throws ContractViolation unless | |e| - 1 | <= 1e-12.
  explicit Direction(RealVector components);
  // Divides by the Euclidean norm first.
  static Direction normalize(RealVector v);
  static Direction from_angle(double theta);

  std::size_t dimension() const { return components_.size(); }
  const RealVector& components() const { return components_; }
  double operator[](std::size_t i) const { return components_[i]; }

 private:
  RealVector components_;
};

/// t = -log2 |z - w|; +infinity iff z == w.
struct LogDistance {
  double t = 0.0;

  bool is_infinite() const { return t == std::numeric_limits<double>::infinity(); }
};

double dot(const Direction& e, std::span<const double> x);
double norm(std::span<const double> x);
double distance(std::span<const double> a, std::span<const double> b);

LogDistance log_distance(std::span<const double> z, std::span<const double> w);

// Closest point w to p with e.w = q; |p - w| == |q - e.p|.
RealVector nearest_on_level_set(std::span<const double> p, const Direction& e, double q);

// Uniform on S^{n-1}: normalized vector of independent standard normals.
Direction sample_direction(std::size_t n, std::mt19937_64& rng);
Direction sample_direction(std::size_t n, std::uint64_t seed);

}  // namespace fraclab
