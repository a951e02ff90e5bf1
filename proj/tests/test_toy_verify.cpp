#include <doctest.h>

#include <cmath>
#include <random>

#include "fraclab/constants.hpp"
#include "fraclab/error.hpp"
#include "fraclab/harness.hpp"
#include "fraclab/toy_verify.hpp"

using namespace fraclab;

namespace {

// Independent look at hypothesis (ii): walk the level-set line through z (planar case)
// and test each producible p near a sampled w against the threshold at that w.
bool sampled_hypothesis_ii(const ComplexityTable& table, const RealVector& z, const Direction& e, int r,
                           const PointLemmaParams& P) {
  const double radius = std::ldexp(1.0, -r);
  const RealVector along{-e[1], e[0]};
  for (int k = -2000; k <= 2000; ++k) {
    const double d = k / 2000.0;
    if (std::abs(d) <= radius) continue;
    const RealVector w{z[0] + d * along[0], z[1] + d * along[1]};
    const double t = -std::log2(std::abs(d));
    const double threshold = (P.eta - P.epsilon) * r + (r - t) * P.delta;
    for (const auto& p : table.entries()) {
      if (p.point.dimension() != 2 || distance(p.point.to_real(), w) >= radius) continue;
      if (!(std::abs(dot(e, p.point.to_real()) - dot(e, z)) < radius)) continue;
      if (p.length < threshold - 1e-9) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("point lemma holds on every instance meeting its hypotheses") {
  const FrozenConstants& C = default_constants();
  ToyUniverse universe(ToyMachine::standard(16));
  const ExperimentConfig defaults;
  int asserted = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const ToyInstance inst = make_toy_instance(seed, 2, 4);
    const auto kz = universe.K_r(inst.z, inst.r);
    if (!kz) continue;
    const PointLemmaParams P{static_cast<double>(*kz) / inst.r, defaults.epsilon, defaults.delta};
    const auto rep = verify_point_lemma(universe.table(), inst.z, inst.e, inst.r, P, C);
    CHECK(rep.hypothesis_i);
    if (rep.hypothesis_ii) CHECK(sampled_hypothesis_ii(universe.table(), inst.z, inst.e, inst.r, P));
    if (!rep.asserted()) {
      CHECK(rep.status == PointLemmaReport::Status::hypothesis_failed);
      CHECK(rep.violator.has_value());
      continue;
    }
    ++asserted;
    CHECK(rep.status == PointLemmaReport::Status::holds);
    CHECK(rep.lhs >= rep.rhs);
    CHECK(rep.rhs == doctest::Approx(*kz - 2 * P.epsilon / P.delta * inst.r - C.C1(inst.r)));
    REQUIRE(rep.witness.has_value());
    CHECK(std::abs(rep.witness->point.coordinate(0) - dot(inst.e, inst.z)) < std::ldexp(1.0, -inst.r));
  }
  CHECK(asserted > 20);
}

TEST_CASE("a cheap dictionary point on the level set breaks hypothesis (ii)") {
  const RealVector z{0.1, -0.2};
  const Direction e = Direction::normalize({1.0, 1.0});
  // Same projection as z, a quarter away along the level set, on a coarse grid.
  const DyadicPoint cheap({3, -5}, 4);  // (0.1875, -0.3125): e.p = e.z - 0.0125 sqrt 2
  const auto table = exact_K(ToyMachine::standard(16, {cheap}));
  const int r = 3;
  const int kz = table.K_r(z, r)->length;
  const auto rep = verify_point_lemma(table, z, e, r, {static_cast<double>(kz) / r, 0.25, 1.0},
                                      default_constants());
  CHECK(rep.status == PointLemmaReport::Status::hypothesis_failed);
  CHECK_FALSE(rep.asserted());
  CHECK_FALSE(rep.hypothesis_ii);
  REQUIRE(rep.violator.has_value());
  CHECK(rep.violator->length <= 5);
  CHECK(rep.to_json().at("status") == "hypothesis_failed");
}

TEST_CASE("point lemma refusals") {
  const auto table = exact_K(ToyMachine::standard(12));
  const RealVector z{0.1, 0.2};
  const Direction e = Direction::from_angle(0.3);
  const auto deg = verify_point_lemma(table, z, e, 2, {0.5, 0.1, 0.0}, default_constants());
  CHECK(deg.status == PointLemmaReport::Status::degenerate);
  const auto low = verify_point_lemma(table, z, e, 3, {0.0, 0.0, 1.0}, default_constants());
  CHECK_FALSE(low.hypothesis_i);
  CHECK(low.status == PointLemmaReport::Status::hypothesis_failed);
  CHECK_THROWS_AS(verify_point_lemma(table, RealVector{0.1}, e, 2, {}, default_constants()), ContractViolation);
}

TEST_CASE("symmetry of information within the frozen bounds") {
  const FrozenConstants& C = default_constants();
  ToyUniverse universe(ToyMachine::standard(16));
  int defined = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const SymmetryTuple t = make_symmetry_tuple(seed, 6);
    const auto rep = verify_symmetry_of_information(universe, t.x, t.y, t.r, t.s, C);
    if (!rep.defined) continue;
    ++defined;
    CHECK(rep.pass);
    CHECK(rep.deviation_joint == std::abs(*rep.K_x_given_y + *rep.K_y - *rep.K_xy));
  }
  CHECK(defined > 100);
}

TEST_CASE("conditioning on x itself costs at most the copy constant") {
  ToyUniverse universe(ToyMachine::standard(16));
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  for (int k = 0; k < 100; ++k) {
    const RealVector x{u(rng)};
    const int r = 1 + k % 6;
    const auto c = universe.conditional_K_r_s(x, r, x, r);
    if (c) CHECK(*c <= default_constants().c_copy);
  }
}

TEST_CASE("projection bound: conditions, clamping and vacuity") {
  const FrozenConstants& C = default_constants();
  ToyUniverse universe(ToyMachine::standard(16));
  int asserted = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const ToyInstance inst = make_toy_instance(seed, 2, 5);
    const auto rep = verify_projection_bound(universe, inst.z, inst.e, 0.5, 0.05, inst.r,
                                             Oracle::of_point(make_oracle_point(seed, 2)), C);
    CHECK(rep.clamped.size() == static_cast<std::size_t>(inst.r) + 1);
    if (rep.condition_1_failure) CHECK_FALSE(rep.condition_1);
    if (!rep.asserted) continue;
    ++asserted;
    CHECK(rep.holds);
  }
  CHECK(asserted > 10);

  const ToyInstance inst = make_toy_instance(3, 2, 5);
  const auto vac = verify_projection_bound(universe, inst.z, inst.e, 0.01, 0.5, inst.r,
                                           Oracle::of_point(make_oracle_point(3, 2)), C);
  CHECK(vac.vacuous);
  CHECK(vac.to_json().contains("clamped_K_t_z"));
  CHECK_THROWS_AS(verify_projection_bound(universe, inst.z, inst.e, 1.0, 0.1, 3, Oracle{}, C), ContractViolation);
}
