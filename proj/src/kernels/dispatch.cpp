#include <atomic>
#include <cstdlib>
#include <string_view>

#include "fraclab/error.hpp"
#include "fraclab/kernels.hpp"

namespace fraclab::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(FRACLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  // FRACLAB_ISA=scalar forces the reference path.
  if (const char* env = std::getenv("FRACLAB_ISA"); env && std::string_view(env) == "scalar") {
    return Isa::scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa detected_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  require(isa_supported(isa), std::string("ISA not supported here: ") + isa_name(isa));
  active().store(isa, std::memory_order_relaxed);
}

void projection_extents(std::span<const double> e, std::span<const std::int32_t* const> axes,
                        std::size_t count, double* first, double* last) {
  require(axes.size() == e.size(), "projection_extents: axis count must match direction");
#ifdef FRACLAB_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::projection_extents(e, axes, count, first, last);
#endif
  scalar::projection_extents(e, axes, count, first, last);
}

void dot_batch(std::span<const double> e, std::span<const double* const> axes,
               std::size_t count, double* out) {
  require(axes.size() == e.size(), "dot_batch: axis count must match direction");
#ifdef FRACLAB_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::dot_batch(e, axes, count, out);
#endif
  scalar::dot_batch(e, axes, count, out);
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
#ifdef FRACLAB_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::popcount(words);
#endif
  return scalar::popcount(words);
}

}  // namespace fraclab::kernels
