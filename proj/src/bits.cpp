#include "fraclab/bits.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fraclab/error.hpp"

namespace fraclab {

namespace {

class RationalPoint : public PointSource {
 public:
  explicit RationalPoint(std::vector<Fraction> c) : coords_(std::move(c)) {
    require(!coords_.empty(), "rational point needs dimension >= 1");
    for (const auto& f : coords_) {
      require(f.denominator > 0 && f.numerator >= 0 && f.numerator < f.denominator,
              "rational coordinates must lie in [0,1)");
      require(f.denominator < (std::int64_t{1} << 62), "rational denominator too large");
    }
  }
  std::size_t dimension() const override { return coords_.size(); }
  std::string expansion(std::size_t i, std::size_t count) const override {
    std::string out;
    out.reserve(count);
    std::int64_t rem = coords_.at(i).numerator;
    const std::int64_t den = coords_[i].denominator;
    for (std::size_t k = 0; k < count; ++k) {
      rem *= 2;
      if (rem >= den) {
        out.push_back('1');
        rem -= den;
      } else {
        out.push_back('0');
      }
    }
    return out;
  }
  std::string describe() const override {
    std::ostringstream ss;
    ss << "rational(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      ss << (i ? "," : "") << coords_[i].numerator << '/' << coords_[i].denominator;
    }
    ss << ')';
    return ss.str();
  }

 private:
  std::vector<Fraction> coords_;
};

class RandomPoint : public PointSource {
 public:
  RandomPoint(std::size_t n, std::uint64_t seed) : n_(n), seed_(seed) {
    require(n >= 1, "random point needs dimension >= 1");
  }
  std::size_t dimension() const override { return n_; }
  std::string expansion(std::size_t i, std::size_t count) const override {
    require(i < n_, "coordinate index out of range");
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::string out;
    out.reserve(count);
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < count; ++k) {
      if (k % 64 == 0) word = rng();
      out.push_back((word >> (63 - k % 64)) & 1 ? '1' : '0');
    }
    return out;
  }
  std::string describe() const override {
    return "random(n=" + std::to_string(n_) + ",seed=" + std::to_string(seed_) + ")";
  }

 private:
  std::size_t n_;
  std::uint64_t seed_;
};

class RealPoint : public PointSource {
 public:
  RealPoint(RealVector x, Box box) : x_(std::move(x)) {
    require(box.dimension() == x_.size() && !x_.empty(), "real point and box dimensions differ");
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const double w = box.hi[i] - box.lo[i];
      double u = w > 0.0 ? (x_[i] - box.lo[i]) / w : 0.0;
      u = std::clamp(u, 0.0, std::nextafter(1.0, 0.0));
      u_.push_back(u);
    }
  }
  std::size_t dimension() const override { return x_.size(); }
  std::string expansion(std::size_t i, std::size_t count) const override {
    double u = u_.at(i);
    std::string out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      u *= 2.0;
      if (u >= 1.0) {
        out.push_back('1');
        u -= 1.0;
      } else {
        out.push_back('0');
      }
    }
    return out;
  }
  std::string describe() const override {
    std::ostringstream ss;
    ss.precision(17);
    ss << "real(";
    for (std::size_t i = 0; i < x_.size(); ++i) ss << (i ? "," : "") << x_[i];
    ss << ')';
    return ss.str();
  }

 private:
  RealVector x_;
  RealVector u_;
};

class FractalPoint : public PointSource {
 public:
  FractalPoint(const IfsSpec& ifs, std::uint64_t seed) : name_(ifs.name), seed_(seed) {
    ifs.validate();
    n_ = ifs.dimension();
    const double ratio = ifs.maps.front().ratio;
    const double m = -std::log2(ratio);
    require(std::abs(m - std::round(m)) < 1e-12 && m >= 1.0,
            "fractal_point needs ratios of the form 2^-m");
    digits_ = static_cast<int>(std::round(m));
    for (const auto& map : ifs.maps) {
      require(map.ratio == ratio, "fractal_point needs a single common ratio");
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
          require(map.orthogonal[a * n_ + b] == (a == b ? 1.0 : 0.0),
                  "fractal_point needs identity orthogonal parts");
        }
      }
      std::vector<std::uint32_t> d;
      for (double t : map.translation) {
        const double scaled = std::ldexp(t, digits_);
        require(scaled >= 0.0 && scaled == std::floor(scaled) && scaled < std::ldexp(1.0, digits_),
                "fractal_point needs translations on the 2^-m grid in [0,1)");
        d.push_back(static_cast<std::uint32_t>(scaled));
      }
      translations_.push_back(std::move(d));
    }
  }
  std::size_t dimension() const override { return n_; }
  std::string expansion(std::size_t i, std::size_t count) const override {
    require(i < n_, "coordinate index out of range");
    std::mt19937_64 rng(seed_);
    std::uniform_int_distribution<std::size_t> pick(0, translations_.size() - 1);
    std::string out;
    out.reserve(count + digits_);
    while (out.size() < count) {
      const std::uint32_t digit = translations_[pick(rng)][i];
      for (int b = digits_ - 1; b >= 0; --b) out.push_back((digit >> b) & 1 ? '1' : '0');
    }
    out.resize(count);
    return out;
  }
  std::string describe() const override {
    return "fractal(" + name_ + ",seed=" + std::to_string(seed_) + ")";
  }

 private:
  std::string name_;
  std::uint64_t seed_;
  std::size_t n_ = 0;
  int digits_ = 1;
  std::vector<std::vector<std::uint32_t>> translations_;
};

}  // namespace

std::unique_ptr<PointSource> rational_point(std::vector<Fraction> coordinates) {
  return std::make_unique<RationalPoint>(std::move(coordinates));
}

std::unique_ptr<PointSource> random_point(std::size_t dimension, std::uint64_t seed) {
  return std::make_unique<RandomPoint>(dimension, seed);
}

std::unique_ptr<PointSource> real_point(RealVector x, Box box) {
  return std::make_unique<RealPoint>(std::move(x), std::move(box));
}

std::unique_ptr<PointSource> fractal_point(const IfsSpec& ifs, std::uint64_t seed) {
  return std::make_unique<FractalPoint>(ifs, seed);
}

BitEncoding encode_point_bits(const PointSource& x, int r, EncodingScheme scheme) {
  require(r >= 0 && r <= kMaxEncodingPrecision, "encoding precision must lie in [0, 4096]");
  const std::size_t n = x.dimension();
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(x.expansion(i, static_cast<std::size_t>(r)));
  BitEncoding enc;
  enc.scheme = scheme;
  enc.precision = r;
  enc.dimension = n;
  enc.bits.reserve(n * static_cast<std::size_t>(r));
  if (scheme == EncodingScheme::interleaved) {
    for (int k = 0; k < r; ++k) {
      for (std::size_t i = 0; i < n; ++i) enc.bits.push_back(coords[i][static_cast<std::size_t>(k)]);
    }
  } else {
    for (const auto& c : coords) enc.bits += c;
  }
  return enc;
}

BitEncoding encode_point_bits(const RealVector& x, int r, EncodingScheme scheme) {
  Box unit{RealVector(x.size(), 0.0), RealVector(x.size(), 1.0)};
  for (double v : x) require(v >= 0.0 && v < 1.0, "point must lie in [0,1)^n; pass a box otherwise");
  return encode_point_bits(*real_point(x, unit), r, scheme);
}

}  // namespace fraclab
