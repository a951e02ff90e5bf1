#include "fraclab/toy_verify.hpp"

#include <cmath>

#include "fraclab/error.hpp"

namespace fraclab {

namespace {

nlohmann::json optional_int(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"program", w->program.to_string()}, {"length", w->length}, {"point", w->point.to_real()}};
}

}  // namespace

const char* status_name(PointLemmaReport::Status s) {
  switch (s) {
    case PointLemmaReport::Status::holds:
      return "holds";
    case PointLemmaReport::Status::fails:
      return "fails";
    case PointLemmaReport::Status::hypothesis_failed:
      return "hypothesis_failed";
    case PointLemmaReport::Status::degenerate:
      return "degenerate";
  }
  return "degenerate";
}

nlohmann::json PointLemmaReport::to_json() const {
  return {{"status", status_name(status)},
          {"note", note},
          {"r", r},
          {"n", n},
          {"K_r_z", optional_int(K_z)},
          {"K_r_ez", optional_int(K_ez)},
          {"hypothesis_i", hypothesis_i},
          {"hypothesis_ii", hypothesis_ii},
          {"violator", witness_json(violator)},
          {"lhs", lhs},
          {"rhs", rhs},
          {"C1", C1},
          {"witness", witness_json(witness)}};
}

PointLemmaReport verify_point_lemma(const ComplexityTable& table, const RealVector& z, const Direction& e,
                                    int r, const PointLemmaParams& params, const FrozenConstants& constants) {
  require(e.dimension() == z.size(), "point lemma: direction and point dimensions differ");
  require(r >= 1, "point lemma needs r >= 1");
  require(params.eta >= 0.0 && params.epsilon >= 0.0 && params.delta >= 0.0,
          "point lemma parameters must be nonnegative");
  PointLemmaReport rep;
  rep.r = r;
  rep.n = z.size();
  rep.C1 = constants.C1(r);
  if (params.delta <= 1e-9) {
    rep.status = PointLemmaReport::Status::degenerate;
    rep.note = "delta is 0: the (n eps / delta) r term is unbounded";
    return rep;
  }

  const double ez = dot(e, z);
  const double radius = std::ldexp(1.0, -r);
  const auto wz = table.K_r(z, r);
  if (wz) rep.K_z = wz->length;
  rep.hypothesis_i = wz && wz->length <= (params.eta + params.epsilon) * r + 1e-9;

  rep.hypothesis_ii = true;
  for (const auto& w : table.entries()) {
    if (w.point.dimension() != z.size()) continue;
    const RealVector p = w.point.to_real();
    const double dp = dot(e, p) - ez;
    if (!(std::abs(dp) < radius)) continue;
    const RealVector foot = nearest_on_level_set(p, e, ez);
    const double dd = distance(foot, z);
    const double slice = std::sqrt(std::max(0.0, radius * radius - dp * dp));
    const double far = dd + slice;
    if (far <= radius || dd - slice >= 1.0) continue;
    const double t = -std::log2(std::min(far, 1.0));
    const double threshold = (params.eta - params.epsilon) * r + (r - t) * params.delta;
    if (w.length < threshold - 1e-9) {
      rep.hypothesis_ii = false;
      rep.violator = w;
      break;
    }
  }

  if (!rep.hypothesis_i || !rep.hypothesis_ii) {
    rep.status = PointLemmaReport::Status::hypothesis_failed;
    rep.note = !rep.hypothesis_i ? "K_r(z) exceeds (eta + eps) r" : "a cheap point lies near the level set";
    return rep;
  }

  const RealVector proj{ez};
  rep.witness = table.K_r(proj, r);
  if (rep.witness) {
    rep.K_ez = rep.witness->length;
    rep.lhs = rep.witness->length;
  } else {
    rep.lhs = table.max_length() + 1;
    rep.note = "no program reaches e.z; K_r(e.z) > L_max";
  }
  rep.rhs = *rep.K_z - (static_cast<double>(rep.n) * params.epsilon / params.delta) * r - rep.C1;
  rep.status = rep.lhs >= rep.rhs ? PointLemmaReport::Status::holds : PointLemmaReport::Status::fails;
  return rep;
}

nlohmann::json SymmetryReport::to_json() const {
  return {{"r", r},
          {"s", s},
          {"K_r_x_given_y", optional_int(K_x_given_y)},
          {"K_r_y", optional_int(K_y)},
          {"K_r_xy", optional_int(K_xy)},
          {"K_rs_x_given_x", optional_int(K_x_given_x)},
          {"K_s_x", optional_int(K_s_x)},
          {"K_r_x", optional_int(K_r_x)},
          {"deviation_joint", deviation_joint},
          {"deviation_split", deviation_split},
          {"bound_joint", bound_joint},
          {"bound_split", bound_split},
          {"defined", defined},
          {"pass", pass}};
}

SymmetryReport verify_symmetry_of_information(const ToyUniverse& universe, double x, double y, int r, int s,
                                              const FrozenConstants& constants) {
  require(r >= s && s >= 0, "symmetry of information needs r >= s >= 0");
  SymmetryReport rep;
  rep.r = r;
  rep.s = s;
  const RealVector vx{x};
  const RealVector vy{y};
  const RealVector vxy{x, y};
  rep.K_x_given_y = universe.conditional_K_r_s(vx, r, vy, r);
  rep.K_y = universe.K_r(vy, r);
  rep.K_xy = universe.K_r(vxy, r);
  rep.K_x_given_x = universe.conditional_K_r_s(vx, r, vx, s);
  rep.K_s_x = universe.K_r(vx, s);
  rep.K_r_x = universe.K_r(vx, r);
  rep.bound_joint = constants.c_sym(r);
  rep.bound_split = constants.c_sym2(r);
  rep.defined = rep.K_x_given_y && rep.K_y && rep.K_xy && rep.K_x_given_x && rep.K_s_x && rep.K_r_x;
  if (!rep.defined) return rep;
  rep.deviation_joint = std::abs(*rep.K_x_given_y + *rep.K_y - *rep.K_xy);
  rep.deviation_split = std::abs(*rep.K_x_given_x + *rep.K_s_x - *rep.K_r_x);
  rep.pass = rep.deviation_joint <= rep.bound_joint && rep.deviation_split <= rep.bound_split;
  return rep;
}

nlohmann::json ProjectionBoundReport::to_json() const {
  return {{"r", r},
          {"eta", eta},
          {"epsilon", epsilon},
          {"condition_1", condition_1},
          {"condition_1_failure", optional_int(condition_1_failure)},
          {"condition_2", condition_2},
          {"K_r_z", optional_int(K_z)},
          {"K_A_r_z", optional_int(K_A_z)},
          {"K_A_r_ez", optional_int(K_A_ez)},
          {"clamped_K_t_z", clamped},
          {"clamp_vacuous", clamp_vacuous},
          {"lhs", lhs},
          {"rhs", rhs},
          {"C2", C2},
          {"vacuous", vacuous},
          {"asserted", asserted},
          {"holds", holds}};
}

ProjectionBoundReport verify_projection_bound(ToyUniverse& universe, const RealVector& z, const Direction& e,
                                              double eta, double epsilon, int r, const Oracle& oracle,
                                              const FrozenConstants& constants) {
  require(e.dimension() == z.size(), "projection bound: direction and point dimensions differ");
  require(r >= 1, "projection bound needs r >= 1");
  require(eta > 0.0 && eta < 1.0 && epsilon >= 0.0, "projection bound needs eta in (0,1), eps >= 0");
  ProjectionBoundReport rep;
  rep.r = r;
  rep.eta = eta;
  rep.epsilon = epsilon;
  rep.C2 = constants.C2;
  const int unreachable = universe.machine().max_length() + 1;
  const std::size_t n = z.size();

  rep.condition_1 = true;
  for (int s = 1; s <= r; ++s) {
    const int k = universe.K_r(e.components(), s).value_or(unreachable);
    if (k < s - std::log2(s)) {
      rep.condition_1 = false;
      rep.condition_1_failure = s;
      break;
    }
  }

  const ComplexityTable& relative = universe.relative(oracle);
  rep.K_z = universe.K_r(z, r);
  if (const auto w = relative.K_r(z, r)) rep.K_A_z = w->length;
  rep.condition_2 = rep.K_z && rep.K_A_z.value_or(unreachable) >= *rep.K_z - epsilon * r - 1e-9;

  const ClampedComplexity clamped = clamp_oracle(relative, z, eta, r);
  rep.clamp_vacuous = clamped.vacuous();
  for (int t = 0; t <= r; ++t) rep.clamped.push_back(clamped.K_t(z, t).value_or(unreachable));

  const RealVector proj{dot(e, z)};
  if (const auto w = relative.K_r(proj, r)) rep.K_A_ez = w->length;
  rep.lhs = rep.K_A_ez.value_or(unreachable);
  rep.rhs = eta * r - epsilon * r - (2.0 * static_cast<double>(n) * epsilon / (1.0 - eta)) * r - rep.C2;
  rep.vacuous = rep.rhs <= 0.0;
  rep.asserted = rep.condition_1 && rep.condition_2;
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

}  // namespace fraclab
