#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fraclab/bits.hpp"

namespace fraclab {

inline constexpr const char* kEstimatorId = "lz76-positional-v1";

struct DictionaryParse {
  std::vector<std::size_t> phrase_starts;
  double bits = 0.0;
};

// Exhaustive-history parse: each phrase is the longest prefix of the rest that
// already occurs starting at an earlier position, plus one fresh bit. A phrase
// starting at p costs log2(max(p,1)) + 1 bits (a back-pointer and the new bit).
DictionaryParse dictionary_parse(std::string_view bits);
double dictionary_complexity(std::string_view bits);

struct ProfileSample {
  int r = 0;
  double k = 0.0;
};

struct ComplexityProfile {
  std::vector<ProfileSample> samples;
  std::size_t dimension = 1;
  std::string estimator = kEstimatorId;
  std::string point;
};

// r_k = round(2^(5 + 0.2 k)) for k = 0..35, i.e. 32 up to 4096.
std::vector<int> profile_schedule();

// k_r = dictionary_complexity(header + encode_point_bits(x, r)).
ComplexityProfile complexity_profile(const PointSource& x, const std::vector<int>& schedule,
                                     EncodingScheme scheme = EncodingScheme::interleaved,
                                     std::string_view header = {});

enum class EffectiveMode { liminf, limsup };

// min (liminf) or max (limsup) of k_r / (n r) over the tail: the last
// `tail_fraction` of samples. Throws ContractViolation for fewer than 8 tail samples.
double effective_dim(const ComplexityProfile& profile, EffectiveMode mode, double tail_fraction = 0.5);

void write_profile_csv(std::ostream& out, const ComplexityProfile& profile);

}  // namespace fraclab
