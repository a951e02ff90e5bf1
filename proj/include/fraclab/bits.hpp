#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fraclab/fractals.hpp"
#include "fraclab/geometry.hpp"

namespace fraclab {

/// A point of [0,1)^n whose binary expansions can be read to any depth.
class PointSource {
 public:
  virtual ~PointSource() = default;
  virtual std::size_t dimension() const = 0;
  // First `count` bits after the binary point of coordinate i, as '0'/'1'.
  virtual std::string expansion(std::size_t i, std::size_t count) const = 0;
  virtual std::string describe() const = 0;
};

struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};

// Exact expansions by long division; every fraction must lie in [0,1).
std::unique_ptr<PointSource> rational_point(std::vector<Fraction> coordinates);
// Independent uniform bits per coordinate from mt19937_64 seeded with (seed, i).
std::unique_ptr<PointSource> random_point(std::size_t dimension, std::uint64_t seed);
// A double vector affinely mapped into [0,1)^n by the box; bits past the mantissa are 0.
std::unique_ptr<PointSource> real_point(RealVector x, Box box);
// A random point of the attractor, by a seeded uniform address. Requires every map
// to have ratio 2^-m (same m), identity orthogonal part, and translations on the
// 2^-m grid inside [0,1), so that the address spells the expansion digit by digit.
std::unique_ptr<PointSource> fractal_point(const IfsSpec& ifs, std::uint64_t seed);

enum class EncodingScheme { interleaved, concatenated };

struct BitEncoding {
  std::string bits;
  EncodingScheme scheme = EncodingScheme::interleaved;
  int precision = 0;
  std::size_t dimension = 1;
};

// First r bits of every coordinate; interleaved round-robin or coordinate after coordinate.
BitEncoding encode_point_bits(const PointSource& x, int r,
                              EncodingScheme scheme = EncodingScheme::interleaved);
// Convenience for points already in [0,1)^n.
BitEncoding encode_point_bits(const RealVector& x, int r,
                              EncodingScheme scheme = EncodingScheme::interleaved);

inline constexpr int kMaxEncodingPrecision = 4096;

}  // namespace fraclab
