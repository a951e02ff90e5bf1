#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fraclab/error.hpp"
#include "fraclab/fractals.hpp"

namespace fraclab {

using nlohmann::json;

namespace {

SimilarityMap map_from_json(const json& j) {
  require(j.is_object(), "IFS map must be a JSON object");
  require(j.contains("ratio") && j.contains("translation"), "IFS map needs 'ratio' and 'translation'");
  const double ratio = j.at("ratio").get<double>();
  RealVector t = j.at("translation").get<RealVector>();
  const std::size_t n = t.size();
  SimilarityMap m;
  if (j.contains("matrix")) {
    const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
    require(rows.size() == n, "IFS map matrix must be n x n");
    m.ratio = ratio;
    m.translation = std::move(t);
    for (const auto& row : rows) {
      require(row.size() == n, "IFS map matrix must be n x n");
      m.orthogonal.insert(m.orthogonal.end(), row.begin(), row.end());
    }
  } else if (j.contains("rotation_degrees")) {
    m = SimilarityMap::rotation2d(ratio, j.at("rotation_degrees").get<double>(), std::move(t));
  } else {
    m = SimilarityMap::scaling(ratio, std::move(t));
  }
  m.validate();
  return m;
}

}  // namespace

IfsSpec parse_ifs_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& err) {
    throw ContractViolation(std::string("IFS JSON does not parse: ") + err.what());
  }
  require(j.is_object() && j.contains("maps"), "IFS JSON needs a 'maps' array");
  IfsSpec ifs;
  ifs.name = j.value("name", std::string("custom"));
  ifs.open_set_condition = j.value("open_set_condition", true);
  try {
    for (const auto& m : j.at("maps")) ifs.maps.push_back(map_from_json(m));
  } catch (const json::exception& err) {
    throw ContractViolation(std::string("malformed IFS map: ") + err.what());
  }
  ifs.validate();
  return ifs;
}

IfsSpec load_ifs_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open IFS file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ifs_json(ss.str());
}

IfsSpec resolve_ifs(const std::string& name_or_path) {
  for (const auto& e : catalog()) {
    if (e.ifs.name == name_or_path) return e.ifs;
  }
  if (std::filesystem::exists(name_or_path)) return load_ifs_json(name_or_path);
  throw NotFound("'" + name_or_path + "' is neither a catalog entry nor an IFS file");
}

void write_cover_csv(std::ostream& out, const GridCover& cover) {
  const std::size_t n = cover.dimension();
  out << "r,n";
  for (std::size_t k = 0; k < n; ++k) out << ",cell_index_" << k;
  out << '\n';
  for (std::size_t i = 0; i < cover.size(); ++i) {
    out << cover.precision() << ',' << n;
    for (auto c : cover.cell(i)) out << ',' << c;
    out << '\n';
  }
}

GridCover read_cover_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "cover CSV is empty");
  require(line.rfind("r,n", 0) == 0, "cover CSV header must start with r,n");
  std::size_t n = 0;
  for (char ch : line) n += ch == ',';
  require(n >= 2, "cover CSV header has no cell columns");
  n -= 1;
  int precision = 0;
  bool have_precision = false;
  std::vector<std::int32_t> cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<long long> values;
    while (std::getline(ss, field, ',')) {
      try {
        values.push_back(std::stoll(field));
      } catch (const std::exception&) {
        throw ContractViolation("cover CSV field is not an integer: '" + field + "'");
      }
    }
    require(values.size() == n + 2, "cover CSV row has the wrong number of fields");
    require(static_cast<std::size_t>(values[1]) == n, "cover CSV row disagrees on n");
    if (!have_precision) {
      precision = static_cast<int>(values[0]);
      have_precision = true;
    }
    require(values[0] == precision, "cover CSV rows disagree on r");
    for (std::size_t k = 0; k < n; ++k) cells.push_back(static_cast<std::int32_t>(values[k + 2]));
  }
  return GridCover(precision, n, std::move(cells));
}

}  // namespace fraclab
