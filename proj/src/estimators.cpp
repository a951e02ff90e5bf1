#include "fraclab/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fraclab/error.hpp"

namespace fraclab {

DictionaryParse dictionary_parse(std::string_view bits) {
  DictionaryParse parse;
  const std::size_t n = bits.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t match = 0;
    for (std::size_t j = 0; j < i && match < n - i; ++j) {
      std::size_t l = 0;
      while (i + l < n && bits[j + l] == bits[i + l]) ++l;
      match = std::max(match, l);
    }
    parse.phrase_starts.push_back(i);
    parse.bits += std::log2(static_cast<double>(std::max<std::size_t>(i, 1))) + 1.0;
    i += std::min(match + 1, n - i);
  }
  return parse;
}

double dictionary_complexity(std::string_view bits) { return dictionary_parse(bits).bits; }

std::vector<int> profile_schedule() {
  std::vector<int> out;
  for (int k = 0; k <= 35; ++k) out.push_back(static_cast<int>(std::lround(std::exp2(5.0 + 0.2 * k))));
  return out;
}

ComplexityProfile complexity_profile(const PointSource& x, const std::vector<int>& schedule,
                                     EncodingScheme scheme, std::string_view header) {
  ComplexityProfile profile;
  profile.dimension = x.dimension();
  profile.point = x.describe();
  if (schedule.empty()) return profile;
  require(std::is_sorted(schedule.begin(), schedule.end()), "profile schedule must be ascending");
  const BitEncoding full = encode_point_bits(x, schedule.back(), scheme);
  for (int r : schedule) {
    std::string bits(header);
    if (scheme == EncodingScheme::interleaved) {
      bits.append(full.bits, 0, static_cast<std::size_t>(r) * profile.dimension);
    } else {
      bits += encode_point_bits(x, r, scheme).bits;
    }
    profile.samples.push_back({r, dictionary_complexity(bits)});
  }
  return profile;
}

double effective_dim(const ComplexityProfile& profile, EffectiveMode mode, double tail_fraction) {
  require(tail_fraction > 0.0 && tail_fraction <= 1.0, "tail fraction must lie in (0,1]");
  const std::size_t total = profile.samples.size();
  const auto tail = static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(total)));
  require(tail >= 8, "profile tail holds " + std::to_string(tail) + " samples; at least 8 are needed");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t i = total - tail; i < total; ++i) {
    const auto& s = profile.samples[i];
    const double density = s.k / (static_cast<double>(profile.dimension) * s.r);
    lo = std::min(lo, density);
    hi = std::max(hi, density);
  }
  return mode == EffectiveMode::liminf ? lo : hi;
}

void write_profile_csv(std::ostream& out, const ComplexityProfile& profile) {
  out << "r,k_r\n";
  const auto precision = out.precision(17);
  for (const auto& s : profile.samples) out << s.r << ',' << s.k << '\n';
  out.precision(precision);
}

}  // namespace fraclab
