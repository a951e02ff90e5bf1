#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "fraclab/kernels.hpp"

namespace fraclab::kernels::avx2 {

void projection_extents(std::span<const double> e, std::span<const std::int32_t* const> axes,
                        std::size_t count, double* first, double* last) {
  double neg = 0.0;
  double pos = 0.0;
  for (double ek : e) {
    neg += std::min(ek, 0.0);
    pos += std::max(ek, 0.0);
  }
  const __m256d vneg = _mm256_set1_pd(neg);
  const __m256d vpos = _mm256_set1_pd(pos);
  const __m256d one = _mm256_set1_pd(1.0);
  const std::size_t n = e.size();

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d base = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n; ++k) {
      const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(axes[k] + i));
      base = _mm256_add_pd(base, _mm256_mul_pd(_mm256_set1_pd(e[k]), _mm256_cvtepi32_pd(c)));
    }
    const __m256d lo = _mm256_floor_pd(_mm256_add_pd(base, vneg));
    const __m256d hi = _mm256_sub_pd(_mm256_ceil_pd(_mm256_add_pd(base, vpos)), one);
    _mm256_storeu_pd(first + i, lo);
    // max(hi, lo) returns lo on ties, matching std::max(lo, hi).
    _mm256_storeu_pd(last + i, _mm256_max_pd(hi, lo));
  }
  for (; i < count; ++i) {
    double base = 0.0;
    for (std::size_t k = 0; k < n; ++k) base += e[k] * static_cast<double>(axes[k][i]);
    const double lo = std::floor(base + neg);
    const double hi = std::ceil(base + pos) - 1.0;
    first[i] = lo;
    last[i] = std::max(lo, hi);
  }
}

void dot_batch(std::span<const double> e, std::span<const double* const> axes,
               std::size_t count, double* out) {
  const std::size_t n = e.size();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d s = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n; ++k) {
      s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_set1_pd(e[k]), _mm256_loadu_pd(axes[k] + i)));
    }
    _mm256_storeu_pd(out + i, s);
  }
  for (; i < count; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += e[k] * axes[k][i];
    out[i] = s;
  }
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words.size(); i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
  return total;
}

}  // namespace fraclab::kernels::avx2
