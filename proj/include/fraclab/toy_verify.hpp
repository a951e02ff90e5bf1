#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclab/constants.hpp"
#include "fraclab/toy_machine.hpp"

namespace fraclab {

struct PointLemmaParams {
  double eta = 0.5;
  double epsilon = 0.1;
  double delta = 0.5;
};

struct PointLemmaReport {
  enum class Status { holds, fails, hypothesis_failed, degenerate };

  Status status = Status::degenerate;
  std::string note;
  int r = 0;
  std::size_t n = 0;
  std::optional<int> K_z;        // K_r(z)
  std::optional<int> K_ez;       // K_r(e.z)
  bool hypothesis_i = false;     // K_r(z) <= (eta + eps) r
  bool hypothesis_ii = false;    // low-complexity level-set points are far from cheap
  std::optional<Witness> violator;  // a producible p breaking (ii)
  double lhs = 0.0;              // K_r(e.z)
  double rhs = 0.0;              // K_r(z) - (n eps / delta) r - C1
  double C1 = 0.0;
  std::optional<Witness> witness;  // shortest program for a point within 2^-r of e.z

  bool asserted() const { return status == Status::holds || status == Status::fails; }
  nlohmann::json to_json() const;
};

const char* status_name(PointLemmaReport::Status s);

// Checks both hypotheses by brute force over the table, then the conclusion
// K_r(e.z) >= K_r(z) - (n eps / delta) r - C1(r).
// Hypothesis (ii) is tested, for each producible p with |e.p - e.z| < 2^-r, against
// the level-set points w within 2^-r of p and with 2^-r < |w - z| <= 1: the least
// favourable such w is farthest from z, giving t = -log2 min(|w* - z| + rho, 1)
// with w* the foot of p on the level set and rho the radius of the slice.
PointLemmaReport verify_point_lemma(const ComplexityTable& table, const RealVector& z, const Direction& e,
                                    int r, const PointLemmaParams& params, const FrozenConstants& constants);

struct SymmetryReport {
  int r = 0;
  int s = 0;
  std::optional<int> K_x_given_y;    // K_r(x | y)
  std::optional<int> K_y;            // K_r(y)
  std::optional<int> K_xy;           // K_r(x, y)
  std::optional<int> K_x_given_x;    // K_{r,s}(x | x)
  std::optional<int> K_s_x;          // K_s(x)
  std::optional<int> K_r_x;          // K_r(x)
  double deviation_joint = 0.0;
  double deviation_split = 0.0;
  double bound_joint = 0.0;
  double bound_split = 0.0;
  bool defined = false;
  bool pass = false;

  nlohmann::json to_json() const;
};

// x, y in R^1; (x, y) is the concatenated point of R^2.
SymmetryReport verify_symmetry_of_information(const ToyUniverse& universe, double x, double y, int r, int s,
                                              const FrozenConstants& constants);

struct ProjectionBoundReport {
  int r = 0;
  double eta = 0.0;
  double epsilon = 0.0;
  bool condition_1 = false;  // K_s(e) >= s - log2 s for 1 <= s <= r
  std::optional<int> condition_1_failure;  // first failing s
  bool condition_2 = false;  // K^A_r(z) >= K_r(z) - eps r
  std::optional<int> K_z;
  std::optional<int> K_A_z;
  std::optional<int> K_A_ez;
  std::vector<int> clamped;  // K^D_t(z), t = 0..r
  bool clamp_vacuous = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double C2 = 0.0;
  bool vacuous = false;  // rhs <= 0
  bool asserted = false;  // both conditions hold
  bool holds = false;     // lhs >= rhs

  nlohmann::json to_json() const;
};

// K_s(e) that no program reaches is reported as the lower bound L_max + 1.
ProjectionBoundReport verify_projection_bound(ToyUniverse& universe, const RealVector& z, const Direction& e,
                                              double eta, double epsilon, int r, const Oracle& oracle,
                                              const FrozenConstants& constants);

}  // namespace fraclab
