// fraclab: fractal projection experiments and toy-universe checks.
// Exit codes: 0 every verdict passes, 1 some verdict fails, 2 bad configuration or input.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fraclab/constants.hpp"
#include "fraclab/dimension.hpp"
#include "fraclab/error.hpp"
#include "fraclab/fractals.hpp"
#include "fraclab/harness.hpp"
#include "fraclab/report.hpp"

using namespace fraclab;

namespace {

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> directions;
  std::vector<int> window;
  std::optional<double> tol;
  std::optional<std::string> constants;
  std::optional<std::string> fractal;
  std::optional<std::size_t> instances;
  std::optional<int> max_length;
  std::optional<std::string> machine;
  std::optional<std::string> point;
  std::vector<int> dimensions;
  std::optional<int> precision;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file; flags override its fields");
  cmd->add_option("--seed", o.seed, "experiment seed");
  cmd->add_option("--out", o.out, "report path stem; writes <stem>.json and <stem>.csv");
  cmd->add_option("--constants", o.constants, "frozen constants file");
}

void add_sweep(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--fractal", o.fractal, "catalog name or IFS JSON file");
  cmd->add_option("--directions", o.directions, "number of sampled directions");
  cmd->add_option("--window", o.window, "precision window r_min r_max")->expected(2);
  cmd->add_option("--tol", o.tol, "tolerance around min{s,1}");
}

ExperimentConfig build_config(ExperimentKind kind, const Overrides& o) {
  ExperimentConfig c;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw NotFound("cannot open config '" + o.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& err) {
      throw ContractViolation("config '" + o.config + "' does not parse: " + err.what());
    }
    c = ExperimentConfig::from_json(j);
    require(!j.contains("kind") || c.kind == kind,
            std::string("config kind '") + kind_name(c.kind) + "' does not match the subcommand");
  }
  c.kind = kind;
  if (o.seed) c.seed = *o.seed;
  if (o.out) c.out = *o.out;
  if (o.directions) c.directions = *o.directions;
  if (!o.window.empty()) c.window = {o.window[0], o.window[1]};
  if (o.tol) c.tol = *o.tol;
  if (o.constants) c.constants = *o.constants;
  if (o.fractal) c.fractal = *o.fractal;
  if (o.instances) c.instances = *o.instances;
  if (o.max_length) c.max_length = *o.max_length;
  if (o.machine) c.machine = *o.machine;
  if (o.point) c.point = *o.point;
  if (!o.dimensions.empty()) c.dimensions = o.dimensions;
  if (o.precision) c.precision = *o.precision;
  c.validate();
  return c;
}

int run(ExperimentKind kind, const Overrides& o) {
  const ExperimentConfig config = build_config(kind, o);
  const FrozenConstants constants =
      config.constants.empty() ? default_constants() : load_constants(config.constants);
  const ExperimentReport report = run_experiment(config, constants);
  if (config.out.empty()) {
    std::cout << report_document(report, utc_timestamp()).dump(2) << '\n';
  } else {
    const ReportPaths paths = write_report(report, config.out);
    std::cout << kind_name(kind) << ": " << (report.pass ? "pass" : "fail") << "  " << paths.json << "  "
              << paths.csv << '\n';
  }
  return report.pass ? 0 : 1;
}

Direction parse_direction(const std::vector<double>& comps, std::optional<double> angle, std::size_t n) {
  if (angle) {
    require(n == 2, "--angle needs a planar set");
    return Direction::from_angle(*angle * M_PI / 180.0);
  }
  require(comps.size() == n, "--direction needs one component per coordinate");
  return Direction::normalize(comps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractal projection experiments and toy-universe verification"};
  app.require_subcommand(1);
  Overrides o;

  auto* cat = app.add_subcommand("catalog", "list the built-in fractals");

  std::string fractal = "fourcorner";
  int r = 8;
  std::string csv_out;
  bool count_only = false;
  auto* cover = app.add_subcommand("cover", "grid cover of a fractal at precision r");
  cover->add_option("--fractal", fractal, "catalog name or IFS JSON file");
  cover->add_option("-r,--precision", r, "grid precision");
  cover->add_option("--out", csv_out, "write the cells as CSV");
  cover->add_flag("--count-only", count_only, "count cells without materializing them");

  std::vector<double> direction;
  std::optional<double> angle;
  auto* project = app.add_subcommand("project", "projected cover along a direction");
  project->add_option("--fractal", fractal, "catalog name or IFS JSON file");
  project->add_option("-r,--precision", r, "grid precision");
  project->add_option("--direction", direction, "direction components (normalized)")->delimiter(',');
  project->add_option("--angle", angle, "planar direction angle in degrees");
  project->add_option("--out", csv_out, "write the projected cells as CSV");

  std::string mode = "ls";
  auto* dim = app.add_subcommand("dim", "box dimension of a fractal, or effective dimension of a point");
  add_common(dim, o);
  dim->add_option("--fractal", o.fractal, "catalog name or IFS JSON file");
  dim->add_option("--window", o.window, "precision window r_min r_max")->expected(2);
  dim->add_option("--mode", mode, "ls, liminf or limsup");
  dim->add_option("--point", o.point, "rational:a/b[,c/d], random:<n> or fractal:<name>");

  auto* marstrand = app.add_subcommand("marstrand", "projection dimensions over sampled directions");
  add_common(marstrand, o);
  add_sweep(marstrand, o);
  auto* packing = app.add_subcommand("packing", "upper-box projection dimensions (one-sided)");
  add_common(packing, o);
  add_sweep(packing, o);

  auto* toy = app.add_subcommand("toy-verify", "point lemma, symmetry and projection bound in a toy universe");
  add_common(toy, o);
  toy->add_option("--instances", o.instances, "number of seeded instances");
  toy->add_option("--max-length", o.max_length, "program length budget");
  toy->add_option("--machine", o.machine, "standard or reference");

  auto* recover = app.add_subcommand("recover", "direction recovery error against 2^(-r+t+alpha)");
  add_common(recover, o);
  recover->add_option("--instances", o.instances, "number of seeded instances");
  recover->add_option("--dimensions", o.dimensions, "ambient dimensions")->delimiter(',');
  recover->add_option("--precision", o.precision, "precision r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& e : catalog()) {
        nlohmann::json ex = nlohmann::json::array();
        for (const auto& [d, v] : e.exceptional) ex.push_back({{"direction", d.components()}, {"dimension", v}});
        out.push_back({{"name", e.ifs.name},
                       {"n", e.ifs.dimension()},
                       {"maps", e.ifs.maps.size()},
                       {"dimension", e.dimension},
                       {"description", e.description},
                       {"exceptional", ex}});
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (cover->parsed()) {
      const IfsSpec ifs = resolve_ifs(fractal);
      if (count_only) {
        std::cout << count_cover(ifs, r) << '\n';
        return 0;
      }
      const GridCover c = generate_cover(ifs, r);
      if (!csv_out.empty()) {
        std::ofstream f(csv_out);
        if (!f) throw NotFound("cannot write '" + csv_out + "'");
        write_cover_csv(f, c);
      }
      std::cout << c.size() << '\n';
      return 0;
    }
    if (project->parsed()) {
      const IfsSpec ifs = resolve_ifs(fractal);
      const Direction e = parse_direction(direction, angle, ifs.dimension());
      const GridCover p = project_cover(generate_cover(ifs, r), e);
      if (!csv_out.empty()) {
        std::ofstream f(csv_out);
        if (!f) throw NotFound("cannot write '" + csv_out + "'");
        write_cover_csv(f, p);
      }
      std::cout << p.size() << '\n';
      return 0;
    }
    if (dim->parsed()) {
      if (o.point) return run(ExperimentKind::dim_point, o);
      const ExperimentConfig c = build_config(ExperimentKind::marstrand, o);
      const IfsSpec ifs = resolve_ifs(c.fractal);
      const auto est = box_dimension(cover_count_series(ifs, c.window), c.window, parse_mode(mode));
      nlohmann::json j = est.to_json();
      j["fractal"] = ifs.name;
      j["similarity_dimension"] = similarity_dimension(ifs);
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (marstrand->parsed()) return run(ExperimentKind::marstrand, o);
    if (packing->parsed()) return run(ExperimentKind::packing, o);
    if (toy->parsed()) return run(ExperimentKind::toy_verify, o);
    if (recover->parsed()) return run(ExperimentKind::recovery_sweep, o);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
