// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fraclab/constants.hpp"
#include "fraclab/dimension.hpp"
#include "fraclab/estimators.hpp"
#include "fraclab/fractals.hpp"
#include "fraclab/harness.hpp"
#include "fraclab/recovery.hpp"
#include "fraclab/report.hpp"
#include "fraclab/toy_machine.hpp"
#include "fraclab/toy_verify.hpp"
#include "toy_grammar.hpp"

using namespace fraclab;

namespace {

// Pinned tolerances and budgets.
constexpr double kGroundTruthTol = 0.05;
constexpr double kGroundTruthSeconds = 60;
constexpr std::size_t kMarstrandDirections = 100;
constexpr double kBandTol = 0.1;
constexpr double kBandFraction = 0.95;
constexpr double kAxisExpected = 0.5;
constexpr double kAxisTol = 0.07;
constexpr double kProjectionSeconds = 300;
constexpr double kPackingLower = 0.9;
constexpr double kToySeconds = 60;
constexpr int kKraftLength = 16;
constexpr int kCrossCheckLength = 12;
constexpr std::size_t kLemmaInstances = 100;
constexpr double kLemmaSeconds = 120;
constexpr std::size_t kRecoveryInstances = 1000;
constexpr double kExactTol = 1e-10;
constexpr double kRecoverySeconds = 30;
constexpr std::size_t kSymmetryTuples = 100;
constexpr double kSymmetrySeconds = 60;
constexpr double kRationalLiminf = 0.1;
constexpr double kRandomLow = 0.9;
constexpr double kRandomHigh = 1.05;
constexpr double kEstimatorSeconds = 30;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome ground_truth() {
  const DimensionWindow w{8, 20};
  const std::vector<std::pair<std::string, double>> sets = {
      {"cantor3", std::log(2.0) / std::log(3.0)}, {"sierpinski", std::log(3.0) / std::log(2.0)}, {"fourcorner", 1.0}};
  Outcome o{true, ""};
  for (const auto& [name, truth] : sets) {
    const double est = box_dimension(cover_count_series(catalog_lookup(name).ifs, w), w, DimensionMode::ls).slope;
    o.pass = o.pass && std::abs(est - truth) <= kGroundTruthTol;
    o.detail += name + "=" + fmt("%.4f", est) + " (truth " + fmt("%.4f", truth) + ") ";
  }
  return o;
}

Outcome marstrand() {
  ExperimentConfig c;
  c.kind = ExperimentKind::marstrand;
  c.fractal = "fourcorner";
  c.directions = kMarstrandDirections;
  c.window = {8, 20};
  c.tol = kBandTol;
  c.pass_fraction = kBandFraction;
  const auto rep = run_marstrand(c, default_constants());
  const double in_band = rep.summary.at("fraction_in_band").get<double>();
  double axis = NAN;
  for (const auto& e : rep.exceptional) {
    if (e.at("direction") == std::vector<double>{1.0, 0.0}) axis = e.at("estimate").get<double>();
  }
  Outcome o;
  o.pass = rep.records.size() == kMarstrandDirections && in_band >= kBandFraction &&
           std::abs(axis - kAxisExpected) <= kAxisTol;
  o.detail = "in [0.9,1.1]: " + fmt("%.2f", in_band) + ", median " +
             fmt("%.4f", rep.summary.at("median").get<double>()) + ", e=(1,0): " + fmt("%.4f", axis);
  return o;
}

Outcome packing() {
  Outcome o{true, ""};
  const std::vector<std::pair<std::string, DimensionWindow>> sets = {{"cantor3x3", {8, 16}}, {"sierpinski", {8, 14}}};
  for (const auto& [name, window] : sets) {
    ExperimentConfig c;
    c.kind = ExperimentKind::packing;
    c.fractal = name;
    c.directions = kMarstrandDirections;
    c.window = window;
    c.tol = 1.0 - kPackingLower;  // lower edge min(s,1) - tol = 0.9
    c.pass_fraction = kBandFraction;
    const auto rep = run_packing(c, default_constants());
    const double above = rep.summary.at("fraction_above_lower").get<double>();
    o.pass = o.pass && above >= kBandFraction;
    o.detail += name + " >= 0.9: " + fmt("%.2f", above) + " (min " + fmt("%.4f", rep.summary.at("min").get<double>()) +
                ") ";
  }
  return o;
}

Outcome toy_exactness() {
  const std::vector<DyadicPoint> dict = {DyadicPoint({1}, 5), DyadicPoint({3, -7}, 6)};
  const DyadicPoint q({5, -2}, 4);
  const ToyMachine machine = ToyMachine::standard(kKraftLength, dict);
  std::set<std::string> halting;
  double kraft = 0.0;
  for (int len = 0; len <= kKraftLength; ++len) {
    for (std::uint32_t b = 0; b < (1u << len); ++b) {
      const ToyProgram prog{b, len};
      if (machine.decode(prog, Oracle::of_point(q))) {
        halting.insert(prog.to_string());
        kraft += std::ldexp(1.0, -len);
      }
    }
  }
  std::size_t prefix_violations = 0;
  for (const auto& s : halting) {
    for (std::size_t cut = 0; cut < s.size(); ++cut) prefix_violations += halting.count(s.substr(0, cut));
  }

  const std::vector<DyadicPoint> small_dict = {DyadicPoint({3}, 7), DyadicPoint({1, 1}, 2)};
  std::vector<toy_grammar::Point> d;
  for (const auto& p : small_dict) d.push_back(p.to_real());
  const DyadicPoint q12({3, -1}, 3);
  const bool plain = toy_grammar::table_as_map(exact_K(ToyMachine::standard(kCrossCheckLength))) ==
                     toy_grammar::generated_K(true, kCrossCheckLength, std::nullopt, {});
  const bool relative =
      toy_grammar::table_as_map(exact_K(ToyMachine::standard(kCrossCheckLength, small_dict), Oracle::of_point(q12))) ==
      toy_grammar::generated_K(true, kCrossCheckLength, q12.to_real(), d);
  const bool reference = toy_grammar::table_as_map(exact_K(ToyMachine::reference(kCrossCheckLength))) ==
                         toy_grammar::generated_K(false, kCrossCheckLength, std::nullopt, {});

  Outcome o;
  o.pass = !halting.empty() && prefix_violations == 0 && kraft <= 1.0 && plain && relative && reference;
  o.detail = std::to_string(halting.size()) + " halting programs, Kraft sum " + fmt("%.6f", kraft) + ", " +
             std::to_string(prefix_violations) + " prefix violations; L=12 cross-check " +
             (plain && relative && reference ? "identical" : "differs");
  return o;
}

Outcome point_lemma() {
  const FrozenConstants& C = default_constants();
  const ExperimentConfig defaults;
  ToyUniverse universe(ToyMachine::standard(defaults.max_length));
  std::size_t found = 0, lemma_ok = 0, recovery_ok = 0, informative = 0;
  std::uint64_t seed = 1;
  for (; found < kLemmaInstances && seed <= 20000; ++seed) {
    const ToyInstance inst = make_toy_instance(seed, 2, defaults.r_max);
    const auto kz = universe.K_r(inst.z, inst.r);
    if (!kz) continue;
    const double eta = static_cast<double>(*kz) / inst.r;
    const auto rep = verify_point_lemma(universe.table(), inst.z, inst.e, inst.r,
                                        {eta, defaults.epsilon, defaults.delta}, C);
    if (!rep.asserted()) continue;
    ++found;
    if (rep.status == PointLemmaReport::Status::holds && rep.lhs >= rep.rhs) ++lemma_ok;
    if (rep.rhs > 0.0) ++informative;
    const double ez = dot(inst.e, inst.z);
    const double q = std::ldexp(std::round(std::ldexp(ez, inst.r + 1)), -(inst.r + 1));
    const int s = inst.r - 1;
    const auto p = recover_point(universe.table(), q, inst.e, s, (eta + defaults.epsilon) * inst.r);
    // The nearest level-set point w to p sits at distance |e.p - e.z|.
    if (p && std::abs(dot(inst.e, p->point.to_real()) - ez) <= std::exp2(C.gamma - s)) ++recovery_ok;
  }
  Outcome o;
  o.pass = found == kLemmaInstances && lemma_ok == found && recovery_ok == found;
  o.detail = std::to_string(found) + " instances with hypotheses (seeds 1.." + std::to_string(seed - 1) +
             "), lemma holds " + std::to_string(lemma_ok) + ", recovery within 2^(gamma-s) " +
             std::to_string(recovery_ok) + ", non-vacuous conclusion " + std::to_string(informative);
  return o;
}

Outcome recovery() {
  ExperimentConfig c;
  c.kind = ExperimentKind::recovery_sweep;
  c.instances = kRecoveryInstances;
  c.dimensions = {2, 3, 4};
  c.precision = 30;
  c.t_min = 1;
  c.t_max = 15;
  const auto rep = run_recovery_sweep(c, default_constants());
  std::size_t passed = 0;
  double worst_ratio = 0.0;
  for (const auto& r : rep.records) {
    if (r.at("pass").get<bool>()) ++passed;
    worst_ratio = std::max(worst_ratio, r.at("error").get<double>() / r.at("bound").get<double>());
  }
  double exact = 0.0;
  std::size_t exact_count = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 1; t <= 15; ++t) {
      const auto inst = make_exact_instance(n, t, 7000 + 100 * n + t);
      const auto [i, j] = select_indices(inst.z, inst.w, inst.e);
      const auto order = recovery_order(n, i, j);
      RealVector q(n), p(n), d;
      for (std::size_t k = 0; k < n; ++k) {
        q[k] = inst.z[order[k]];
        p[k] = inst.w[order[k]];
        if (k >= 2) d.push_back(inst.e[order[k]]);
      }
      exact = std::max(exact, std::abs(recover_e2(q, p, d, inst.e[j] >= 0 ? 0 : 1) - inst.e[j]));
      ++exact_count;
    }
  }
  Outcome o;
  o.pass = rep.records.size() == kRecoveryInstances && passed == kRecoveryInstances && exact <= kExactTol;
  o.detail = std::to_string(passed) + "/" + std::to_string(rep.records.size()) + " within 2^(-r+t+alpha), worst error/bound " +
             fmt("%.3g", worst_ratio) + "; exact inputs max |e2 error| " + fmt("%.2e", exact) + " over " +
             std::to_string(exact_count);
  return o;
}

Outcome symmetry() {
  const FrozenConstants& C = default_constants();
  ToyUniverse universe(ToyMachine::standard(16));
  std::size_t defined = 0, passed = 0;
  double worst_joint = 0.0, worst_split = 0.0;
  std::uint64_t seed = 1;
  for (; defined < kSymmetryTuples && seed <= 10000; ++seed) {
    const SymmetryTuple t = make_symmetry_tuple(seed, 6);
    const auto rep = verify_symmetry_of_information(universe, t.x, t.y, t.r, t.s, C);
    if (!rep.defined) continue;
    ++defined;
    if (rep.pass && rep.deviation_joint <= rep.bound_joint && rep.deviation_split <= rep.bound_split) ++passed;
    worst_joint = std::max(worst_joint, rep.deviation_joint - rep.bound_joint);
    worst_split = std::max(worst_split, rep.deviation_split - rep.bound_split);
  }
  Outcome o;
  o.pass = defined == kSymmetryTuples && passed == defined;
  o.detail = std::to_string(passed) + "/" + std::to_string(defined) + " tuples (seeds 1.." + std::to_string(seed - 1) +
             "), max deviation minus bound: joint " + fmt("%.2f", worst_joint) + ", split " + fmt("%.2f", worst_split);
  return o;
}

Outcome estimators() {
  const auto schedule = profile_schedule();
  bool ordered = true;
  double worst_rational = 0.0;
  for (auto f : std::vector<Fraction>{{1, 3}, {2, 7}, {5, 17}, {1, 2}}) {
    const auto prof = complexity_profile(*rational_point({f}), schedule);
    const double lo = effective_dim(prof, EffectiveMode::liminf);
    ordered = ordered && lo <= effective_dim(prof, EffectiveMode::limsup);
    worst_rational = std::max(worst_rational, lo);
  }
  const auto pair = complexity_profile(*rational_point({{1, 3}, {3, 11}}), schedule);
  worst_rational = std::max(worst_rational, effective_dim(pair, EffectiveMode::liminf));

  double lo_min = 2.0, hi_max = 0.0;
  std::size_t in_range = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto prof = complexity_profile(*random_point(1 + seed % 2, seed), schedule);
    const double lo = effective_dim(prof, EffectiveMode::liminf);
    const double hi = effective_dim(prof, EffectiveMode::limsup);
    ordered = ordered && lo <= hi;
    lo_min = std::min(lo_min, lo);
    hi_max = std::max(hi_max, hi);
    if (lo >= kRandomLow && hi <= kRandomHigh) ++in_range;
  }
  Outcome o;
  o.pass = worst_rational <= kRationalLiminf && in_range == 20 && ordered;
  o.detail = "rational max liminf " + fmt("%.4f", worst_rational) + "; random " + std::to_string(in_range) +
             "/20 in [0.9,1.05] (liminf min " + fmt("%.4f", lo_min) + ", limsup max " + fmt("%.4f", hi_max) +
             "); ordered " + (ordered ? "yes" : "no");
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The report file with its timestamp line removed; everything else is compared byte for byte.
std::string without_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") == std::string::npos) out += line + '\n';
  }
  return out;
}

Outcome reproducibility() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("fraclab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<ExperimentConfig> configs(4);
  configs[0].kind = ExperimentKind::marstrand;
  configs[0].directions = 20;
  configs[0].window = {8, 14};
  configs[1].kind = ExperimentKind::toy_verify;
  configs[1].instances = 20;
  configs[1].max_length = 16;
  configs[2].kind = ExperimentKind::recovery_sweep;
  configs[2].instances = 60;
  configs[3].kind = ExperimentKind::dim_point;
  configs[3].point = "random:2";
  std::size_t same = 0;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    configs[k].seed = 11 + k;
    std::string json[2], csv[2];
    for (int run = 0; run < 2; ++run) {
      const auto paths =
          write_report(run_experiment(configs[k], default_constants()), (dir / (std::to_string(k) + "_" + std::to_string(run))).string());
      json[run] = without_timestamp(slurp(paths.json));
      csv[run] = slurp(paths.csv);
    }
    if (json[0] == json[1] && csv[0] == csv[1]) ++same;
  }
  fs::remove_all(dir);
  Outcome o;
  o.pass = same == configs.size();
  o.detail = std::to_string(same) + "/" + std::to_string(configs.size()) +
             " experiments (marstrand, toy-verify, recovery-sweep, dim-point) byte-identical minus timestamp";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "dimension ground truth", kGroundTruthSeconds, ground_truth},
      {2, "projections of the four-corner set", kProjectionSeconds, marstrand},
      {3, "packing lower bound for projections", kProjectionSeconds, packing},
      {4, "toy machine exactness", kToySeconds, toy_exactness},
      {5, "point lemma and recovery on the toy machine", kLemmaSeconds, point_lemma},
      {6, "direction recovery error bound", kRecoverySeconds, recovery},
      {7, "symmetry of information", kSymmetrySeconds, symmetry},
      {8, "effective-dimension estimator sanity", kEstimatorSeconds, estimators},
      {9, "reproducibility", 0.0, reproducibility},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("error: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_seconds <= 0.0 || secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d. %s: %s; %.1f s", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    if (c.budget_seconds > 0.0) std::printf(" (budget %.0f s)", c.budget_seconds);
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
