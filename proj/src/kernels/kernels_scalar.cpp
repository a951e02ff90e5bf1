#include <algorithm>
#include <bit>
#include <cmath>

#include "fraclab/kernels.hpp"

namespace fraclab::kernels::scalar {

void projection_extents(std::span<const double> e, std::span<const std::int32_t* const> axes,
                        std::size_t count, double* first, double* last) {
  double neg = 0.0;
  double pos = 0.0;
  for (double ek : e) {
    neg += std::min(ek, 0.0);
    pos += std::max(ek, 0.0);
  }
  for (std::size_t i = 0; i < count; ++i) {
    double base = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) base += e[k] * static_cast<double>(axes[k][i]);
    const double lo = std::floor(base + neg);
    const double hi = std::ceil(base + pos) - 1.0;
    first[i] = lo;
    last[i] = std::max(lo, hi);
  }
}

void dot_batch(std::span<const double> e, std::span<const double* const> axes,
               std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) s += e[k] * axes[k][i];
    out[i] = s;
  }
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
  std::uint64_t total = 0;
  for (std::uint64_t w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

}  // namespace fraclab::kernels::scalar
