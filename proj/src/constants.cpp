#include "fraclab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "fraclab/error.hpp"

namespace fraclab {

double LogBound::operator()(int r) const { return log_coefficient * std::log2(r + 1.0) + constant; }

double FrozenConstants::C1(int r) const { return C1_log * std::log2(std::max(r, 1)) + C1_const; }

double FrozenConstants::alpha_for(int n) const {
  const auto it = alpha.find(n);
  if (it == alpha.end()) throw NotFound("no frozen alpha for dimension " + std::to_string(n));
  return it->second;
}

nlohmann::json FrozenConstants::to_json() const {
  nlohmann::json a = nlohmann::json::object();
  for (const auto& [n, v] : alpha) a[std::to_string(n)] = v;
  return {{"schema", 1},
          {"version", version},
          {"c_copy", c_copy},
          {"c_sym", {{"log", c_sym.log_coefficient}, {"const", c_sym.constant}}},
          {"c_sym2", {{"log", c_sym2.log_coefficient}, {"const", c_sym2.constant}}},
          {"C1", {{"log", C1_log}, {"const", C1_const}}},
          {"C2", C2},
          {"alpha", a},
          {"gamma", gamma},
          {"c_subadd", c_subadd},
          {"provenance", provenance}};
}

FrozenConstants FrozenConstants::from_json(const nlohmann::json& j) {
  FrozenConstants c;
  try {
    c.version = j.at("version").get<std::string>();
    c.c_copy = j.at("c_copy").get<double>();
    c.c_sym = {j.at("c_sym").at("log").get<double>(), j.at("c_sym").at("const").get<double>()};
    c.c_sym2 = {j.at("c_sym2").at("log").get<double>(), j.at("c_sym2").at("const").get<double>()};
    c.C1_log = j.at("C1").at("log").get<double>();
    c.C1_const = j.at("C1").at("const").get<double>();
    c.C2 = j.at("C2").get<double>();
    for (const auto& [k, v] : j.at("alpha").items()) c.alpha[std::stoi(k)] = v.get<double>();
    c.gamma = j.at("gamma").get<double>();
    c.c_subadd = j.at("c_subadd").get<double>();
    c.provenance = j.value("provenance", nlohmann::json::object());
  } catch (const nlohmann::json::exception& err) {
    throw ContractViolation(std::string("malformed constants file: ") + err.what());
  }
  return c;
}

FrozenConstants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open constants file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& err) {
    throw ContractViolation("constants file '" + path + "' does not parse: " + err.what());
  }
  return FrozenConstants::from_json(j);
}

std::string default_constants_path() {
  if (const char* env = std::getenv("FRACLAB_CONSTANTS"); env && *env) return env;
  return FRACLAB_DEFAULT_CONSTANTS;
}

const FrozenConstants& default_constants() {
  static const FrozenConstants c = load_constants(default_constants_path());
  return c;
}

}  // namespace fraclab
