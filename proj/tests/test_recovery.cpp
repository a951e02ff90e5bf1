#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fraclab/constants.hpp"
#include "fraclab/error.hpp"
#include "fraclab/recovery.hpp"

using namespace fraclab;

TEST_CASE("index selection picks the largest gap and an opposing term") {
  // delta = z - w = (0.1, -0.4, 0.3); e chosen orthogonal to delta.
  const RealVector z{0.5, 0.0, 0.2};
  const RealVector w{0.4, 0.4, -0.1};
  const Direction e = Direction::normalize({1.0, 1.0, 1.0});  // e.delta = 0
  const auto [i, j] = select_indices(z, w, e);
  CHECK(i == 1);
  CHECK(j == 0);  // lowest index whose term has the opposite sign to -0.4
  CHECK(recovery_order(3, i, j) == std::vector<std::size_t>{1, 0, 2});
  CHECK(recovery_order(4, 2, 0) == std::vector<std::size_t>{2, 0, 1, 3});
}

TEST_CASE("index selection contracts") {
  const Direction e = Direction::normalize({1.0, 1.0});
  CHECK_THROWS_AS(select_indices({0.1, 0.2}, {0.1, 0.2}, e), ContractViolation);
  CHECK_THROWS_AS(select_indices({0.1, 0.2}, {0.2, 0.2}, e), ContractViolation);
  // e = (1, 0) with delta along the second axis: e_i = 0, nothing to balance.
  CHECK_THROWS_AS(select_indices({0.0, 0.1}, {0.0, 0.3}, Direction(RealVector{1.0, 0.0})), DegenerateInstance);
}

TEST_CASE("exact inputs make e_j a root of the quadratic") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int t = 1; t <= 15; t += 2) {
      const auto inst = make_exact_instance(n, t, 100 + n * 31 + t);
      const auto [i, j] = select_indices(inst.z, inst.w, inst.e);
      const auto order = recovery_order(n, i, j);
      RealVector q(n), p(n), d;
      for (std::size_t k = 0; k < n; ++k) {
        q[k] = inst.z[order[k]];
        p[k] = inst.w[order[k]];
        if (k >= 2) d.push_back(inst.e[order[k]]);
      }
      const double r0 = recover_e2(q, p, d, 0);
      const double r1 = recover_e2(q, p, d, 1);
      CHECK(r0 >= r1);
      const double truth = inst.e[j];
      CHECK(std::min(std::abs(r0 - truth), std::abs(r1 - truth)) < 1e-10);
      CHECK(std::abs((truth >= 0 ? r0 : r1) - truth) < 1e-10);

      const RealVector dir = recover_direction(q, p, d, truth >= 0 ? 0 : 1);
      for (std::size_t k = 0; k < n; ++k) CHECK(dir[k] == doctest::Approx(inst.e[order[k]]).epsilon(1e-8));
    }
  }
}

TEST_CASE("generated instances honour their stated accuracies") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 1; t <= 15; ++t) {
      const auto inst = make_recovery_instance(n, 30, t, 500 + n * 100 + t);
      CHECK(inst.t == doctest::Approx(t).epsilon(1e-9));
      CHECK(std::abs(dot(inst.e, inst.z) - dot(inst.e, inst.w)) < 1e-14);
      CHECK(distance(inst.q.to_real(), inst.z) <= std::ldexp(1.0, -30));
      CHECK(distance(inst.p.to_real(), inst.w) <= std::ldexp(1.0, -30));
      CHECK(inst.q.precision() <= 42);
      const auto [i, j] = select_indices(inst.z, inst.w, inst.e);
      RealVector rest;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j) rest.push_back(inst.e[k]);
      }
      REQUIRE(rest.size() == inst.d.size());
      if (!rest.empty()) CHECK(distance(rest, inst.d) <= std::ldexp(1.0, -static_cast<int>(30 * n)));
    }
  }
  CHECK_THROWS_AS(make_recovery_instance(1, 30, 2, 1), ContractViolation);
  CHECK_THROWS_AS(make_recovery_instance(2, 30, 31, 1), ContractViolation);
}

TEST_CASE("recovery error stays within the frozen bound") {
  const FrozenConstants& C = default_constants();
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const int t = 1 + static_cast<int>(seed % 15);
      const auto rep = verify_direction_recovery(make_recovery_instance(n, 30, t, seed), C);
      CHECK(rep.pass);
      CHECK_FALSE(rep.uninformative);
      CHECK(rep.bound == doctest::Approx(std::exp2(-30 + rep.t + C.alpha_for(static_cast<int>(n)))));
    }
  }
  CHECK_THROWS_AS(C.alpha_for(7), NotFound);
}

TEST_CASE("errors shrink as the precision grows") {
  double coarse = 0.0, fine = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    coarse += std::log2(verify_direction_recovery(make_recovery_instance(3, 20, 4, seed), 0.0).error);
    fine += std::log2(verify_direction_recovery(make_recovery_instance(3, 30, 4, seed), 0.0).error);
  }
  // Ten more bits of precision buy roughly ten bits of accuracy.
  CHECK((coarse - fine) / 50 > 8.0);
}

TEST_CASE("csv rows follow the report header") {
  std::ostringstream out;
  write_recovery_csv_header(out);
  const auto rep = verify_direction_recovery(make_recovery_instance(2, 30, 5, 9), 1.0);
  write_recovery_csv_row(out, 9, rep);
  const std::string s = out.str();
  CHECK(s.rfind("seed,n,r,t,error,bound,pass\n9,2,30,", 0) == 0);
  CHECK(s.back() == '\n');
  CHECK(rep.to_json().at("n") == 2);
}
