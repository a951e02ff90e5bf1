#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fraclab/constants.hpp"
#include "fraclab/geometry.hpp"

namespace fraclab {

/// Two points on a common level set of e and their precision-r approximations.
struct RecoveryInstance {
  RealVector z;
  RealVector w;
  Direction e{RealVector{1.0, 0.0}};
  int r = 0;
  DyadicPoint q;  // |q - z| <= 2^-r
  DyadicPoint p;  // |p - w| <= 2^-r
  RealVector d;   // approximation of e with the selected i, j removed, in index order
  double t = 0.0; // -log2 |z - w|
};

// 0-based (i, j): i maximizes |z_i - w_i| (lowest index on ties); j is the lowest
// index with z_j != w_j whose term (z_j - w_j) e_j has the opposite sign to the i term.
// Throws ContractViolation if z == w or e.(z - w) != 0 within 1e-12, and
// DegenerateInstance when no such j exists.
std::pair<std::size_t, std::size_t> select_indices(const RealVector& z, const RealVector& w, const Direction& e);

// Coordinates reordered as (i, j, the rest ascending).
std::vector<std::size_t> recovery_order(std::size_t n, std::size_t i, std::size_t j);

// Root of a' x^2 + b' x + c' = 0 with, for D = p - q over coordinates 3.. and S = sum D_k d_k,
//   a' = (q1 - p1)^2 + (p2 - q2)^2,  b' = 2 (p2 - q2) S,
//   c' = S^2 + (q1 - p1)^2 (sum d_k^2 - 1);
// h = 0 picks (-b' + sqrt disc) / 2a', h = 1 the other root. Inputs are already permuted.
// Throws DegenerateInstance for a' = 0 or a discriminant below -1e-12.
double recover_e2(const RealVector& q, const RealVector& p, const RealVector& d, int h);

// e2 from recover_e2, e1 from e.(q - p) = 0, the rest from d, renormalized; permuted order.
RealVector recover_direction(const RealVector& q, const RealVector& p, const RealVector& d, int h);

struct RecoveryReport {
  std::size_t n = 0;
  int r = 0;
  double t = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  int h = 0;
  double e2_true = 0.0;
  double e2_recovered = 0.0;
  double error = 0.0;
  double bound = 0.0;
  bool uninformative = false;  // bound >= 1: t too close to r for the bound to say anything
  bool pass = false;

  nlohmann::json to_json() const;
};

// error = |recovered e_j - e_j| against bound 2^(-r + t + alpha_n); h from the sign of e_j.
RecoveryReport verify_direction_recovery(const RecoveryInstance& instance, const FrozenConstants& constants);
RecoveryReport verify_direction_recovery(const RecoveryInstance& instance, double alpha);

// Random z in [-1,1]^n, w = z + 2^-t u with u a unit vector orthogonal to e, q and p
// within 2^-r of z and w on the 2^-(r+12) grid, d within 2^-(n r) of the remaining
// components of e.
RecoveryInstance make_recovery_instance(std::size_t n, int r, double t, std::uint64_t seed);

// Exact inputs: q = z, p = w, d = e's remaining components (q and p at precision 52).
RecoveryInstance make_exact_instance(std::size_t n, int t, std::uint64_t seed);

void write_recovery_csv_header(std::ostream& out);
void write_recovery_csv_row(std::ostream& out, std::uint64_t seed, const RecoveryReport& rep);

}  // namespace fraclab
