#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclab/bits.hpp"
#include "fraclab/constants.hpp"
#include "fraclab/dimension.hpp"
#include "fraclab/geometry.hpp"

namespace fraclab {

enum class ExperimentKind { marstrand, packing, toy_verify, recovery_sweep, dim_point };

const char* kind_name(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::marstrand;
  std::uint64_t seed = 1;
  std::string out;        // report path stem; never part of the hash
  std::string constants;  // empty: the default constants file

  // marstrand / packing
  std::string fractal = "fourcorner";
  std::size_t directions = 100;
  DimensionWindow window{8, 20};
  double tol = 0.1;
  double pass_fraction = 0.95;

  // toy-verify
  std::string machine = "standard";
  int max_length = 20;
  int small_max_length = 16;  // universe for the symmetry and projection-bound checks
  std::size_t instances = 100;
  int r_max = 5;
  int symmetry_r_max = 6;
  double epsilon = 0.25;  // point lemma
  double delta = 1.0;
  double projection_eta = 0.5;
  double projection_epsilon = 0.05;

  // recovery-sweep
  std::vector<int> dimensions{2, 3, 4};
  int precision = 30;
  int t_min = 1;
  int t_max = 15;

  // dim-point: "rational:a/b[,c/d...]", "random:<n>", "fractal:<catalog name>"
  std::string point = "random:1";

  // Throws ContractViolation for unknown keys or out-of-range values.
  static ExperimentConfig from_json(const nlohmann::json& j);
  // Canonical form: every field but `out`, keys sorted.
  nlohmann::json to_json() const;
  void validate() const;
};

std::uint64_t fnv1a(std::string_view bytes);
std::uint64_t config_hash(const ExperimentConfig& config);

// Direction k is the k-th draw of sample_direction from mt19937_64(seed).
std::vector<Direction> sample_directions(std::size_t n, std::size_t count, std::uint64_t seed);

std::unique_ptr<PointSource> parse_point_spec(const std::string& spec, std::uint64_t seed);

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::marstrand;
  nlohmann::json config;
  nlohmann::json provenance;
  nlohmann::json records = nlohmann::json::array();
  nlohmann::json exceptional = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();
  bool pass = false;
  std::string csv;  // header line plus one line per record

  // Full JSON without the timestamp field.
  nlohmann::json to_json() const;
};

// Summary of per-direction estimates against target = min(s, 1):
// fraction >= target - tol, fraction in [target - tol, target + tol], median, max.
// two_sided additionally requires every estimate <= target + tol.
nlohmann::json summarize_estimates(const nlohmann::json& records, double s, double tol, double pass_fraction,
                                   bool two_sided);

ExperimentReport run_marstrand(const ExperimentConfig& config, const FrozenConstants& constants);
ExperimentReport run_packing(const ExperimentConfig& config, const FrozenConstants& constants);
ExperimentReport run_toy_verify(const ExperimentConfig& config, const FrozenConstants& constants);
ExperimentReport run_recovery_sweep(const ExperimentConfig& config, const FrozenConstants& constants);
ExperimentReport run_dim_point(const ExperimentConfig& config, const FrozenConstants& constants);
ExperimentReport run_experiment(const ExperimentConfig& config, const FrozenConstants& constants);

// Seeded instance families, shared by the experiment runner and calibration.
struct ToyInstance {
  RealVector z;
  Direction e{RealVector{1.0, 0.0}};
  int r = 1;
};
// z uniform in [-0.45, 0.45)^n, e uniform on the sphere, r uniform in [1, r_max].
ToyInstance make_toy_instance(std::uint64_t seed, std::size_t n, int r_max);

struct SymmetryTuple {
  double x = 0.0;
  double y = 0.0;
  int r = 1;
  int s = 0;
};
// x, y uniform in [-0.45, 0.45), r uniform in [1, r_max], s uniform in [0, r].
SymmetryTuple make_symmetry_tuple(std::uint64_t seed, int r_max);

// A point of [-1/2, 1/2)^n at precision 4, used as the side-information oracle.
DyadicPoint make_oracle_point(std::uint64_t seed, std::size_t n);

// t for instance k of a sweep: cycles through t_min..t_max.
int sweep_t(std::size_t k, int t_min, int t_max);

}  // namespace fraclab
