#include "fraclab/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "fraclab/error.hpp"

namespace fraclab {

std::pair<std::size_t, std::size_t> select_indices(const RealVector& z, const RealVector& w, const Direction& e) {
  const std::size_t n = z.size();
  require(w.size() == n && e.dimension() == n, "select_indices: dimension mismatch");
  require(n >= 2, "select_indices needs n >= 2");
  RealVector delta(n);
  for (std::size_t k = 0; k < n; ++k) delta[k] = z[k] - w[k];
  require(std::any_of(delta.begin(), delta.end(), [](double v) { return v != 0.0; }),
          "select_indices needs z != w");
  require(std::abs(dot(e, delta)) <= 1e-12, "select_indices needs e.(z - w) = 0");

  std::size_t i = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (std::abs(delta[k]) > std::abs(delta[i])) i = k;
  }
  const double ti = delta[i] * e[i];
  if (ti == 0.0) throw DegenerateInstance("the maximal-gap coordinate has e_i = 0; no sign change to use");
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || delta[k] == 0.0) continue;
    const double tk = delta[k] * e[k];
    if ((tk > 0.0 && ti < 0.0) || (tk < 0.0 && ti > 0.0)) return {i, k};
  }
  throw DegenerateInstance("no coordinate j balances the maximal-gap term of e.(z - w)");
}

std::vector<std::size_t> recovery_order(std::size_t n, std::size_t i, std::size_t j) {
  require(i < n && j < n && i != j, "recovery_order needs distinct in-range indices");
  std::vector<std::size_t> order{i, j};
  for (std::size_t k = 0; k < n; ++k) {
    if (k != i && k != j) order.push_back(k);
  }
  return order;
}

double recover_e2(const RealVector& q, const RealVector& p, const RealVector& d, int h) {
  const std::size_t n = q.size();
  require(p.size() == n && n >= 2 && d.size() == n - 2, "recover_e2: dimension mismatch");
  require(h == 0 || h == 1, "recover_e2: h is a bit");
  double S = 0.0;
  double dd = 0.0;
  for (std::size_t k = 2; k < n; ++k) {
    S += (p[k] - q[k]) * d[k - 2];
    dd += d[k - 2] * d[k - 2];
  }
  const double g1 = q[0] - p[0];
  const double g2 = p[1] - q[1];
  const double a = g1 * g1 + g2 * g2;
  const double b = 2.0 * g2 * S;
  const double c = S * S + g1 * g1 * (dd - 1.0);
  if (a == 0.0 || g1 == 0.0) throw DegenerateInstance("recover_e2: q_1 = p_1, the quadratic degenerates");
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    if (disc < -1e-12) throw DegenerateInstance("recover_e2: negative discriminant; approximations inconsistent");
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  return (-b + (h == 0 ? root : -root)) / (2.0 * a);
}

RealVector recover_direction(const RealVector& q, const RealVector& p, const RealVector& d, int h) {
  const std::size_t n = q.size();
  const double e2 = recover_e2(q, p, d, h);
  double rest = e2 * (q[1] - p[1]);
  for (std::size_t k = 2; k < n; ++k) rest += d[k - 2] * (q[k] - p[k]);
  RealVector e(n);
  e[0] = -rest / (q[0] - p[0]);
  e[1] = e2;
  for (std::size_t k = 2; k < n; ++k) e[k] = d[k - 2];
  const double len = norm(e);
  for (auto& v : e) v /= len;
  return e;
}

nlohmann::json RecoveryReport::to_json() const {
  return {{"n", n},         {"r", r},
          {"t", t},         {"i", i},
          {"j", j},         {"h", h},
          {"e2_true", e2_true}, {"e2_recovered", e2_recovered},
          {"error", error}, {"bound", bound},
          {"uninformative", uninformative}, {"pass", pass}};
}

RecoveryReport verify_direction_recovery(const RecoveryInstance& inst, double alpha) {
  const std::size_t n = inst.z.size();
  require(inst.r >= 1, "recovery needs r >= 1");
  require(std::isfinite(inst.t) && inst.t > 0.0 && inst.t <= inst.r, "recovery needs t in (0, r]");
  const auto [i, j] = select_indices(inst.z, inst.w, inst.e);
  const auto order = recovery_order(n, i, j);
  require(inst.d.size() == n - 2, "recovery instance: d has the wrong length");
  RealVector q(n), p(n);
  for (std::size_t k = 0; k < n; ++k) {
    q[k] = inst.q.coordinate(order[k]);
    p[k] = inst.p.coordinate(order[k]);
  }
  RecoveryReport rep;
  rep.n = n;
  rep.r = inst.r;
  rep.t = inst.t;
  rep.i = i;
  rep.j = j;
  rep.e2_true = inst.e[j];
  rep.h = rep.e2_true >= 0.0 ? 0 : 1;
  rep.e2_recovered = recover_e2(q, p, inst.d, rep.h);
  rep.error = std::abs(rep.e2_recovered - rep.e2_true);
  rep.bound = std::exp2(-inst.r + inst.t + alpha);
  rep.uninformative = rep.bound >= 1.0;
  rep.pass = rep.error <= rep.bound;
  return rep;
}

RecoveryReport verify_direction_recovery(const RecoveryInstance& instance, const FrozenConstants& constants) {
  return verify_direction_recovery(instance, constants.alpha_for(static_cast<int>(instance.z.size())));
}

namespace {

RealVector random_unit_orthogonal(const Direction& e, std::mt19937_64& rng) {
  const std::size_t n = e.dimension();
  std::normal_distribution<double> g;
  while (true) {
    RealVector u(n);
    for (auto& v : u) v = g(rng);
    const double proj = dot(e, u);
    for (std::size_t k = 0; k < n; ++k) u[k] -= proj * e[k];
    const double len = norm(u);
    if (len < 1e-6) continue;
    for (auto& v : u) v /= len;
    // Reproject once more so e.u is at rounding level.
    const double again = dot(e, u);
    for (std::size_t k = 0; k < n; ++k) u[k] -= again * e[k];
    return u;
  }
}

RealVector random_ball_offset(std::size_t n, double radius, std::mt19937_64& rng) {
  const Direction dir = sample_direction(n, rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double len = radius * u(rng);
  RealVector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = len * dir[k];
  return v;
}

RealVector add(const RealVector& a, const RealVector& b) {
  RealVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

RealVector remaining_components(const Direction& e, std::size_t i, std::size_t j) {
  RealVector d;
  for (std::size_t k = 0; k < e.dimension(); ++k) {
    if (k != i && k != j) d.push_back(e[k]);
  }
  return d;
}

// w on the level set of z at distance exactly 2^-t (up to rounding).
RealVector level_partner(const RealVector& z, const Direction& e, double t, std::mt19937_64& rng) {
  const RealVector u = random_unit_orthogonal(e, rng);
  RealVector w(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) w[k] = z[k] + std::exp2(-t) * u[k];
  // Pull w back onto the level set exactly as far as doubles allow.
  return nearest_on_level_set(w, e, dot(e, z));
}

}  // namespace

RecoveryInstance make_recovery_instance(std::size_t n, int r, double t, std::uint64_t seed) {
  require(n >= 2, "recovery instances need n >= 2");
  require(r >= 1 && r <= 40, "recovery instances need 1 <= r <= 40");
  require(t > 0.0 && t <= r, "recovery instances need t in (0, r]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  RecoveryInstance inst;
  inst.r = r;
  inst.e = sample_direction(n, rng);
  inst.z.resize(n);
  for (auto& v : inst.z) v = coord(rng);
  inst.w = level_partner(inst.z, inst.e, t, rng);
  inst.t = log_distance(inst.z, inst.w).t;

  const double radius = std::exp2(-r);
  const int grid = r + 12;
  const double slack = std::sqrt(static_cast<double>(n)) * std::exp2(-grid - 1);
  inst.q = DyadicPoint::round(add(inst.z, random_ball_offset(n, radius - 2 * slack, rng)), grid);
  inst.p = DyadicPoint::round(add(inst.w, random_ball_offset(n, radius - 2 * slack, rng)), grid);

  const auto [i, j] = select_indices(inst.z, inst.w, inst.e);
  inst.d = remaining_components(inst.e, i, j);
  if (!inst.d.empty()) {
    const RealVector off = random_ball_offset(inst.d.size() > 1 ? inst.d.size() : 2,
                                              std::exp2(-static_cast<double>(n) * r), rng);
    for (std::size_t k = 0; k < inst.d.size(); ++k) inst.d[k] += off[k];
  }
  return inst;
}

RecoveryInstance make_exact_instance(std::size_t n, int t, std::uint64_t seed) {
  require(n >= 2, "recovery instances need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  RecoveryInstance inst;
  inst.r = 52;
  inst.e = sample_direction(n, rng);
  inst.z.resize(n);
  for (auto& v : inst.z) v = std::ldexp(std::round(std::ldexp(coord(rng), 20)), -20);
  inst.w = level_partner(inst.z, inst.e, t, rng);
  inst.t = log_distance(inst.z, inst.w).t;
  inst.q = DyadicPoint::round(inst.z, 52);
  inst.p = DyadicPoint::round(inst.w, 52);
  const auto [i, j] = select_indices(inst.z, inst.w, inst.e);
  inst.d = remaining_components(inst.e, i, j);
  return inst;
}

void write_recovery_csv_header(std::ostream& out) { out << "seed,n,r,t,error,bound,pass\n"; }

void write_recovery_csv_row(std::ostream& out, std::uint64_t seed, const RecoveryReport& rep) {
  const auto precision = out.precision(17);
  out << seed << ',' << rep.n << ',' << rep.r << ',' << rep.t << ',' << rep.error << ',' << rep.bound << ','
      << (rep.pass ? 1 : 0) << '\n';
  out.precision(precision);
}

}  // namespace fraclab
