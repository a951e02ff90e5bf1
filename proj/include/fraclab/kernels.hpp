#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
//
// The entry points in namespace kernels dispatch on the active ISA, which is
// detected once at startup and can be forced for testing. Both variants
// evaluate the same expression tree in the same order without contraction,
// so their outputs are bit-identical.

#include <cstddef>
#include <cstdint>
#include <span>

namespace fraclab::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa detected_isa();
Isa active_isa();
// Throws ContractViolation if the CPU or build lacks the ISA.
void set_active_isa(Isa isa);

// Cell i of a grid cover occupies prod_k [c_k, c_k + 1) in grid units.
// Its projection onto e spans [base + neg, base + pos) with base = sum_k e_k c_k,
// neg = sum_k min(e_k, 0), pos = sum_k max(e_k, 0); the extents written are
//   first[i] = floor(base + neg),  last[i] = max(first[i], ceil(base + pos) - 1).
// axes[k] points at `count` int32 coordinates of axis k.
void projection_extents(std::span<const double> e, std::span<const std::int32_t* const> axes,
                        std::size_t count, double* first, double* last);

// out[i] = sum_k e_k * axes[k][i], summed in axis order.
void dot_batch(std::span<const double> e, std::span<const double* const> axes,
               std::size_t count, double* out);

std::uint64_t popcount(std::span<const std::uint64_t> words);

namespace scalar {
void projection_extents(std::span<const double> e, std::span<const std::int32_t* const> axes,
                        std::size_t count, double* first, double* last);
void dot_batch(std::span<const double> e, std::span<const double* const> axes,
               std::size_t count, double* out);
std::uint64_t popcount(std::span<const std::uint64_t> words);
}  // namespace scalar

namespace avx2 {
void projection_extents(std::span<const double> e, std::span<const std::int32_t* const> axes,
                        std::size_t count, double* first, double* last);
void dot_batch(std::span<const double> e, std::span<const double* const> axes,
               std::size_t count, double* out);
std::uint64_t popcount(std::span<const std::uint64_t> words);
}  // namespace avx2

}  // namespace fraclab::kernels
