#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace fraclab {

/// Constants measured once by tools/calibrate_constants and frozen in data/constants.json.
struct LogBound {
  double log_coefficient = 0.0;
  double constant = 0.0;

  // log_coefficient * log2(r + 1) + constant
  double operator()(int r) const;
};

struct FrozenConstants {
  std::string version;
  double c_copy = 2.0;   // K_{r,r}(x | x) never exceeds this
  LogBound c_sym;        // |K_r(x|y) + K_r(y) - K_r(x,y)|
  LogBound c_sym2;       // |K_{r,s}(x|x) + K_s(x) - K_r(x)|
  double C1_log = 3.0;   // point-lemma slack C1(r) = C1_log log2 r + C1_const
  double C1_const = 16.0;
  double C2 = 0.0;       // projection-bound slack
  std::map<int, double> alpha;  // direction-recovery exponent per ambient dimension
  double gamma = 1.0;    // recover_point lands within 2^(gamma - s) of the level set
  double c_subadd = 0.0; // dictionary_complexity subadditivity slack per log2 length
  nlohmann::json provenance;

  double C1(int r) const;
  double alpha_for(int n) const;  // throws NotFound for uncalibrated n

  nlohmann::json to_json() const;
  static FrozenConstants from_json(const nlohmann::json& j);
};

FrozenConstants load_constants(const std::string& path);
// data/constants.json of the source tree (path fixed at build time), or
// FRACLAB_CONSTANTS when that environment variable is set.
const FrozenConstants& default_constants();
std::string default_constants_path();

}  // namespace fraclab
