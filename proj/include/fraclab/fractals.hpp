#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fraclab/geometry.hpp"

namespace fraclab {

// Ambient dimensions supported by the cover machinery.
inline constexpr std::size_t kMaxCoverDimension = 8;
inline constexpr int kDefaultMaxPrecision = 24;

/// x -> ratio * Q x + translation, with Q orthogonal (row-major n x n).
struct SimilarityMap {
  double ratio = 0.5;
  std::vector<double> orthogonal;
  RealVector translation;

  static SimilarityMap scaling(double ratio, RealVector translation);
  static SimilarityMap rotation2d(double ratio, double degrees, RealVector translation);

  std::size_t dimension() const { return translation.size(); }
  RealVector apply(std::span<const double> x) const;
  // Throws ContractViolation unless ratio in (0,1) and Q^T Q = I within 1e-10.
  void validate() const;
};

struct IfsSpec {
  std::string name;
  std::vector<SimilarityMap> maps;
  bool open_set_condition = true;

  std::size_t dimension() const { return maps.empty() ? 0 : maps.front().dimension(); }
  void validate() const;
};

struct Box {
  RealVector lo;
  RealVector hi;

  std::size_t dimension() const { return lo.size(); }
  double diameter() const;
};

// Smallest axis box found by shrinking the contraction ball under hull(union f_i(B)).
Box attractor_bounds(const IfsSpec& ifs);

// Unique s >= 0 with sum ratio_i^s = 1 (bisection to 1e-12).
double similarity_dimension(const IfsSpec& ifs);

/// Occupied cells of the 2^-precision grid. Cell c is prod_i [c_i 2^-r, (c_i + 1) 2^-r).
///
/// Cells are stored flattened (dimension ints per cell), sorted lexicographically and unique.
class GridCover {
 public:
  GridCover(int precision, std::size_t dimension, std::vector<std::int32_t> cells);

  int precision() const { return precision_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return dimension_ == 0 ? 0 : cells_.size() / dimension_; }
  std::span<const std::int32_t> cell(std::size_t i) const {
    return {cells_.data() + i * dimension_, dimension_};
  }
  const std::vector<std::int32_t>& flat() const { return cells_; }
  bool contains(std::span<const std::int32_t> c) const;

  // Parent cells one level up; 2^n children one level down.
  GridCover coarsened() const;
  GridCover refined() const;

  bool operator==(const GridCover& other) const = default;

 private:
  int precision_;
  std::size_t dimension_;
  std::vector<std::int32_t> cells_;
};

struct CoverLimits {
  int max_precision = kDefaultMaxPrecision;
  std::size_t max_cells = std::size_t{1} << 27;
};

// Union over the IFS words w with ratio_w * diam(B) < 2^-r (and whose parent word
// is not yet that small) of the grid cells met by the box hull(f_w(B)). Boxes are
// rasterized as [floor(lo/h), ceil(hi/h) - 1] per axis.
GridCover generate_cover(const IfsSpec& ifs, int r, const CoverLimits& limits = {});

// |generate_cover(ifs, r)| without materializing cells; memoizes repeated
// cube-relative piece configurations, so grid-aligned IFS stay cheap at high r.
std::uint64_t count_cover(const IfsSpec& ifs, int r, const CoverLimits& limits = {});

/// Per-axis columns of a cover, reusable across many projection directions.
struct CoverColumns {
  int precision = 0;
  std::size_t count = 0;
  std::vector<std::vector<std::int32_t>> axes;

  explicit CoverColumns(const GridCover& cover);
};

// 1-D cover at the same precision: each cell's projected interval rasterized, unioned.
GridCover project_cover(const GridCover& cover, const Direction& e);
GridCover project_cover(const CoverColumns& columns, const Direction& e);
std::uint64_t count_projection(const CoverColumns& columns, const Direction& e);

struct CatalogEntry {
  IfsSpec ifs;
  double dimension = 0.0;  // Moran dimension
  std::string description;
  // Directions with known dim(proj_e E) < min{s,1}, paired with that value.
  std::vector<std::pair<Direction, double>> exceptional;
};

const std::vector<CatalogEntry>& catalog();
// Throws NotFound for unknown names.
const CatalogEntry& catalog_lookup(const std::string& name);

// JSON: {"name", "open_set_condition", "maps": [{"ratio", "rotation_degrees" | "matrix", "translation"}]}
IfsSpec load_ifs_json(const std::string& path);
IfsSpec parse_ifs_json(const std::string& text);
// Catalog name, or a path to an IFS JSON file.
IfsSpec resolve_ifs(const std::string& name_or_path);

// CSV with header r,n,cell_index_0,...,cell_index_{n-1}.
void write_cover_csv(std::ostream& out, const GridCover& cover);
GridCover read_cover_csv(std::istream& in);

}  // namespace fraclab
