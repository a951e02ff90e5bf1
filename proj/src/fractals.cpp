#include "fraclab/fractals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "fraclab/error.hpp"
#include "fraclab/kernels.hpp"

namespace fraclab {

SimilarityMap SimilarityMap::scaling(double ratio, RealVector translation) {
  const std::size_t n = translation.size();
  SimilarityMap m;
  m.ratio = ratio;
  m.orthogonal.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m.orthogonal[i * n + i] = 1.0;
  m.translation = std::move(translation);
  return m;
}

SimilarityMap SimilarityMap::rotation2d(double ratio, double degrees, RealVector translation) {
  require(translation.size() == 2, "rotation2d needs a 2-D translation");
  const double th = degrees * std::numbers::pi / 180.0;
  SimilarityMap m;
  m.ratio = ratio;
  m.orthogonal = {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
  // Quarter turns should be exact, not off by 1e-16.
  for (double& v : m.orthogonal) {
    if (std::abs(v) < 1e-15) v = 0.0;
  }
  m.translation = std::move(translation);
  return m;
}

RealVector SimilarityMap::apply(std::span<const double> x) const {
  const std::size_t n = dimension();
  require(x.size() == n, "SimilarityMap::apply: dimension mismatch");
  RealVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += orthogonal[i * n + j] * x[j];
    y[i] = ratio * s + translation[i];
  }
  return y;
}

void SimilarityMap::validate() const {
  const std::size_t n = dimension();
  require(n >= 1, "similarity map needs dimension >= 1");
  require(ratio > 0.0 && ratio < 1.0, "similarity ratio must lie in (0,1)");
  require(orthogonal.size() == n * n, "orthogonal part must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += orthogonal[k * n + i] * orthogonal[k * n + j];
      require(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-10, "orthogonal part fails Q^T Q = I");
    }
  }
}

void IfsSpec::validate() const {
  require(!maps.empty(), "IFS needs at least one map");
  const std::size_t n = maps.front().dimension();
  require(n >= 1 && n <= kMaxCoverDimension, "IFS dimension out of supported range");
  for (const auto& m : maps) {
    require(m.dimension() == n, "all IFS maps must share one dimension");
    m.validate();
  }
}

double Box::diameter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
  return std::sqrt(s);
}

namespace {

Box image_box(const SimilarityMap& m, const Box& b) {
  const std::size_t n = m.dimension();
  Box out{RealVector(n), RealVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double c = 0.0;
    double h = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double q = m.orthogonal[i * n + j];
      c += q * 0.5 * (b.lo[j] + b.hi[j]);
      h += std::abs(q) * 0.5 * (b.hi[j] - b.lo[j]);
    }
    out.lo[i] = m.ratio * (c - h) + m.translation[i];
    out.hi[i] = m.ratio * (c + h) + m.translation[i];
  }
  return out;
}

}  // namespace

Box attractor_bounds(const IfsSpec& ifs) {
  ifs.validate();
  const std::size_t n = ifs.dimension();
  double max_t = 0.0;
  double max_ratio = 0.0;
  for (const auto& m : ifs.maps) {
    max_t = std::max(max_t, norm(m.translation));
    max_ratio = std::max(max_ratio, m.ratio);
  }
  const double radius = max_t / (1.0 - max_ratio);
  Box box{RealVector(n, -radius), RealVector(n, radius)};
  for (int iter = 0; iter < 2000; ++iter) {
    Box hull{RealVector(n, std::numeric_limits<double>::infinity()),
             RealVector(n, -std::numeric_limits<double>::infinity())};
    for (const auto& m : ifs.maps) {
      const Box img = image_box(m, box);
      for (std::size_t i = 0; i < n; ++i) {
        hull.lo[i] = std::min(hull.lo[i], img.lo[i]);
        hull.hi[i] = std::max(hull.hi[i], img.hi[i]);
      }
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = std::max(box.lo[i], hull.lo[i]);
      const double hi = std::max(lo, std::min(box.hi[i], hull.hi[i]));
      change = std::max({change, lo - box.lo[i], box.hi[i] - hi});
      box.lo[i] = lo;
      box.hi[i] = hi;
    }
    if (change == 0.0) break;
  }
  return box;
}

double similarity_dimension(const IfsSpec& ifs) {
  ifs.validate();
  auto excess = [&](double s) {
    double sum = 0.0;
    for (const auto& m : ifs.maps) sum += std::pow(m.ratio, s);
    return sum - 1.0;
  };
  if (excess(0.0) <= 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (excess(hi) > 0.0) hi *= 2.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// GridCover

namespace {

void sort_unique_cells(std::vector<std::int32_t>& cells, std::size_t n) {
  const std::size_t count = cells.size() / n;
  if (n == 1) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return;
  }
  if (n == 2) {
    std::vector<std::uint64_t> keys(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto a = static_cast<std::uint32_t>(cells[2 * i]) ^ 0x80000000u;
      const auto b = static_cast<std::uint32_t>(cells[2 * i + 1]) ^ 0x80000000u;
      keys[i] = (std::uint64_t{a} << 32) | b;
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    cells.resize(keys.size() * 2);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      cells[2 * i] = static_cast<std::int32_t>(static_cast<std::uint32_t>(keys[i] >> 32) ^ 0x80000000u);
      cells[2 * i + 1] = static_cast<std::int32_t>(static_cast<std::uint32_t>(keys[i]) ^ 0x80000000u);
    }
    return;
  }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(cells.begin() + a * n, cells.begin() + (a + 1) * n,
                                        cells.begin() + b * n, cells.begin() + (b + 1) * n);
  };
  auto same = [&](std::size_t a, std::size_t b) {
    return std::equal(cells.begin() + a * n, cells.begin() + (a + 1) * n, cells.begin() + b * n);
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), same), order.end());
  std::vector<std::int32_t> out;
  out.reserve(order.size() * n);
  for (std::size_t i : order) out.insert(out.end(), cells.begin() + i * n, cells.begin() + (i + 1) * n);
  cells = std::move(out);
}

}  // namespace

GridCover::GridCover(int precision, std::size_t dimension, std::vector<std::int32_t> cells)
    : precision_(precision), dimension_(dimension), cells_(std::move(cells)) {
  require(dimension_ >= 1, "GridCover needs dimension >= 1");
  require(cells_.size() % dimension_ == 0, "GridCover cell data is not a multiple of n");
  sort_unique_cells(cells_, dimension_);
}

bool GridCover::contains(std::span<const std::int32_t> c) const {
  require(c.size() == dimension_, "GridCover::contains: dimension mismatch");
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto m = cell(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), c.begin(), c.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(c.begin(), c.end(), cell(lo).begin());
}

GridCover GridCover::coarsened() const {
  std::vector<std::int32_t> out(cells_.size());
  // Arithmetic shift floors negative indices too.
  for (std::size_t i = 0; i < cells_.size(); ++i) out[i] = cells_[i] >> 1;
  return GridCover(precision_ - 1, dimension_, std::move(out));
}

GridCover GridCover::refined() const {
  const std::size_t n = dimension_;
  const std::size_t children = std::size_t{1} << n;
  std::vector<std::int32_t> out;
  out.reserve(cells_.size() * children);
  for (std::size_t i = 0; i < size(); ++i) {
    const auto c = cell(i);
    for (std::size_t b = 0; b < children; ++b) {
      for (std::size_t k = 0; k < n; ++k) out.push_back(2 * c[k] + static_cast<std::int32_t>((b >> k) & 1));
    }
  }
  return GridCover(precision_ + 1, n, std::move(out));
}

// ---------------------------------------------------------------------------
// Cover traversal
//
// Every node of the 2^n-tree is a dyadic cube; the IFS pieces f_w(attractor)
// that may meet it are held in the cube's own coordinates, where the cube is
// [0,1)^n. A piece is refined into its IFS children while its diameter is at
// least the cube side, so at precision r the surviving pieces are exactly the
// Moran cut at scale 2^-r. In cube coordinates the subtree below a node depends
// only on (pieces, remaining levels), which is what count_cover memoizes.

namespace {

constexpr std::size_t kMaxDim = kMaxCoverDimension;
using Coords = std::array<double, kMaxDim>;

struct Piece {
  double ratio;
  std::uint32_t q;
  Coords t;
};

class PieceEngine {
 public:
  explicit PieceEngine(const IfsSpec& ifs) : n_(ifs.dimension()), maps_(ifs.maps) {
    const Box b = attractor_bounds(ifs);
    diameter_ = b.diameter();
    for (std::size_t k = 0; k < n_; ++k) {
      box_center_[k] = 0.5 * (b.lo[k] + b.hi[k]);
      box_half_[k] = 0.5 * (b.hi[k] - b.lo[k]);
    }
    std::vector<double> identity(n_ * n_, 0.0);
    for (std::size_t k = 0; k < n_; ++k) identity[k * n_ + k] = 1.0;
    identity_ = intern(identity);
    for (const auto& m : maps_) map_q_.push_back(intern(m.orthogonal));
  }

  std::size_t dimension() const { return n_; }
  std::uint32_t identity() const { return identity_; }

  // Root cube of side 2^m centred on the origin; cells at precision -m are {-1,0}^n.
  int root_exponent() const {
    double extent = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      extent = std::max({extent, std::abs(box_center_[k] - box_half_[k]),
                         std::abs(box_center_[k] + box_half_[k])});
    }
    int m = 0;
    while (std::ldexp(1.0, m) <= extent) ++m;
    return m;
  }

  bool meets_unit_cube(const Piece& p) const {
    const Coords& off = center_offset_[p.q];
    const Coords& half = half_extent_[p.q];
    for (std::size_t k = 0; k < n_; ++k) {
      const double c = p.ratio * off[k] + p.t[k];
      const double h = p.ratio * half[k];
      const double first = std::floor(c - h);
      const double last = std::max(first, std::ceil(c + h) - 1.0);
      if (first > 0.0 || last < 0.0) return false;
    }
    return true;
  }

  // Refines pieces until each is smaller than the unit cube, dropping those that miss it.
  void settle(std::vector<Piece>& work, std::vector<Piece>& out) {
    out.clear();
    while (!work.empty()) {
      const Piece p = work.back();
      work.pop_back();
      if (!meets_unit_cube(p)) continue;
      if (p.ratio * diameter_ < 1.0) {
        out.push_back(p);
        continue;
      }
      for (std::size_t i = 0; i < maps_.size(); ++i) work.push_back(child(p, i));
    }
    std::sort(out.begin(), out.end(), [this](const Piece& a, const Piece& b) { return less(a, b); });
    out.erase(std::unique(out.begin(), out.end(),
                          [this](const Piece& a, const Piece& b) { return !less(a, b) && !less(b, a); }),
              out.end());
  }

  // Pieces re-expressed in the coordinates of sub-cube `b` (bit k of b = upper half on axis k).
  void to_subcube(const std::vector<Piece>& in, std::size_t b, std::vector<Piece>& out) const {
    out.clear();
    for (const Piece& p : in) {
      Piece c = p;
      c.ratio = 2.0 * p.ratio;
      for (std::size_t k = 0; k < n_; ++k) c.t[k] = 2.0 * p.t[k] - static_cast<double>((b >> k) & 1);
      out.push_back(c);
    }
  }

  void append_key(const std::vector<Piece>& pieces, std::string& key) const {
    for (const Piece& p : pieces) {
      key.append(reinterpret_cast<const char*>(&p.ratio), sizeof(double));
      key.append(reinterpret_cast<const char*>(&p.q), sizeof(std::uint32_t));
      key.append(reinterpret_cast<const char*>(p.t.data()), n_ * sizeof(double));
    }
  }

 private:
  bool less(const Piece& a, const Piece& b) const {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    if (a.q != b.q) return a.q < b.q;
    for (std::size_t k = 0; k < n_; ++k) {
      if (a.t[k] != b.t[k]) return a.t[k] < b.t[k];
    }
    return false;
  }

  std::uint32_t intern(const std::vector<double>& q) {
    if (auto it = ids_.find(q); it != ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(mats_.size());
    ids_.emplace(q, id);
    mats_.push_back(q);
    Coords off{};
    Coords half{};
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        off[i] += q[i * n_ + j] * box_center_[j];
        half[i] += std::abs(q[i * n_ + j]) * box_half_[j];
      }
    }
    center_offset_.push_back(off);
    half_extent_.push_back(half);
    products_.emplace_back(maps_.size(), kUnset);
    return id;
  }

  std::uint32_t compose(std::uint32_t q, std::size_t i) {
    if (products_[q][i] != kUnset) return products_[q][i];
    std::uint32_t id;
    if (q == identity_) {
      id = map_q_[i];
    } else if (map_q_[i] == identity_) {
      id = q;
    } else {
      const auto& a = mats_[q];
      const auto& b = maps_[i].orthogonal;
      std::vector<double> c(n_ * n_, 0.0);
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s)
          for (std::size_t k = 0; k < n_; ++k) c[r * n_ + s] += a[r * n_ + k] * b[k * n_ + s];
      id = intern(c);
    }
    products_[q][i] = id;
    return id;
  }

  Piece child(const Piece& p, std::size_t i) {
    const SimilarityMap& m = maps_[i];
    Piece c;
    c.ratio = p.ratio * m.ratio;
    c.q = compose(p.q, i);
    c.t = p.t;
    if (p.q == identity_) {
      for (std::size_t k = 0; k < n_; ++k) c.t[k] += p.ratio * m.translation[k];
    } else {
      const auto& a = mats_[p.q];
      for (std::size_t k = 0; k < n_; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += a[k * n_ + j] * m.translation[j];
        c.t[k] += p.ratio * s;
      }
    }
    return c;
  }

  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  std::size_t n_;
  std::vector<SimilarityMap> maps_;
  double diameter_ = 0.0;
  Coords box_center_{};
  Coords box_half_{};
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> map_q_;
  std::map<std::vector<double>, std::uint32_t> ids_;
  std::vector<std::vector<double>> mats_;
  std::vector<Coords> center_offset_;
  std::vector<Coords> half_extent_;
  std::vector<std::vector<std::uint32_t>> products_;
};

class CoverWalker {
 public:
  CoverWalker(const IfsSpec& ifs, int r, const CoverLimits& limits)
      : engine_(ifs), r_(r), limits_(limits) {
    if (r > limits.max_precision) {
      throw LimitExceeded("cover precision " + std::to_string(r) + " exceeds the limit of " +
                          std::to_string(limits.max_precision));
    }
    require(r >= 0, "cover precision must be >= 0");
    m_ = engine_.root_exponent();
    const std::size_t depth = static_cast<std::size_t>(r_ + m_) + 2;
    raw_.resize(depth);
    settled_.resize(depth);
  }

  template <class Visit>
  void for_each_root(Visit&& visit) {
    const std::size_t n = engine_.dimension();
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
      Piece p;
      p.ratio = std::ldexp(1.0, -m_);
      p.q = engine_.identity();
      p.t.fill(0.0);
      std::array<std::int64_t, kMaxDim> index{};
      for (std::size_t k = 0; k < n; ++k) {
        index[k] = ((b >> k) & 1) ? 0 : -1;
        p.t[k] = -static_cast<double>(index[k]);
      }
      raw_[0].assign(1, p);
      engine_.settle(raw_[0], settled_[0]);
      if (!settled_[0].empty()) visit(index);
    }
  }

  std::vector<std::int32_t> enumerate() {
    std::vector<std::int32_t> cells;
    for_each_root([&](const std::array<std::int64_t, kMaxDim>& index) {
      enumerate_node(0, index, cells);
    });
    return cells;
  }

  std::uint64_t count() {
    std::uint64_t total = 0;
    for_each_root([&](const std::array<std::int64_t, kMaxDim>&) { total += count_node(0); });
    return total;
  }

 private:
  int remaining(std::size_t depth) const { return r_ + m_ - static_cast<int>(depth); }

  void enumerate_node(std::size_t depth, const std::array<std::int64_t, kMaxDim>& index,
                      std::vector<std::int32_t>& cells) {
    const std::size_t n = engine_.dimension();
    if (remaining(depth) == 0) {
      if (cells.size() / n >= limits_.max_cells) {
        throw LimitExceeded("cover exceeds the cell limit of " + std::to_string(limits_.max_cells));
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (index[k] < std::numeric_limits<std::int32_t>::min() ||
            index[k] > std::numeric_limits<std::int32_t>::max()) {
          throw LimitExceeded("cell index exceeds 32-bit range");
        }
        cells.push_back(static_cast<std::int32_t>(index[k]));
      }
      return;
    }
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
      engine_.to_subcube(settled_[depth], b, raw_[depth + 1]);
      engine_.settle(raw_[depth + 1], settled_[depth + 1]);
      if (settled_[depth + 1].empty()) continue;
      std::array<std::int64_t, kMaxDim> child = index;
      for (std::size_t k = 0; k < n; ++k) child[k] = 2 * index[k] + static_cast<std::int64_t>((b >> k) & 1);
      enumerate_node(depth + 1, child, cells);
    }
  }

  std::uint64_t count_node(std::size_t depth) {
    const int rem = remaining(depth);
    if (rem == 0) return 1;
    std::string key(reinterpret_cast<const char*>(&rem), sizeof(rem));
    engine_.append_key(settled_[depth], key);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t n = engine_.dimension();
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
      engine_.to_subcube(settled_[depth], b, raw_[depth + 1]);
      engine_.settle(raw_[depth + 1], settled_[depth + 1]);
      if (settled_[depth + 1].empty()) continue;
      total += count_node(depth + 1);
    }
    if (memo_.size() < kMemoCapacity) memo_.emplace(std::move(key), total);
    return total;
  }

  static constexpr std::size_t kMemoCapacity = std::size_t{1} << 22;

  PieceEngine engine_;
  int r_;
  int m_ = 0;
  CoverLimits limits_;
  std::vector<std::vector<Piece>> raw_;
  std::vector<std::vector<Piece>> settled_;
  std::unordered_map<std::string, std::uint64_t> memo_;
};

}  // namespace

GridCover generate_cover(const IfsSpec& ifs, int r, const CoverLimits& limits) {
  ifs.validate();
  CoverWalker walker(ifs, r, limits);
  return GridCover(r, ifs.dimension(), walker.enumerate());
}

std::uint64_t count_cover(const IfsSpec& ifs, int r, const CoverLimits& limits) {
  ifs.validate();
  CoverWalker walker(ifs, r, limits);
  return walker.count();
}

// ---------------------------------------------------------------------------
// Projection

CoverColumns::CoverColumns(const GridCover& cover)
    : precision(cover.precision()), count(cover.size()), axes(cover.dimension()) {
  const std::size_t n = cover.dimension();
  for (auto& a : axes) a.resize(count);
  const auto& flat = cover.flat();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < n; ++k) axes[k][i] = flat[i * n + k];
  }
}

namespace {

// Marks the projected extents into a bitmap; returns (first index, bitmap).
std::pair<std::int64_t, std::vector<std::uint64_t>> projection_bitmap(const CoverColumns& columns,
                                                                      const Direction& e) {
  require(e.dimension() == columns.axes.size(), "project_cover: direction dimension mismatch");
  if (columns.count == 0) return {0, {}};
  std::vector<const std::int32_t*> axes;
  for (const auto& a : columns.axes) axes.push_back(a.data());
  std::vector<double> first(columns.count);
  std::vector<double> last(columns.count);
  kernels::projection_extents(e.components(), axes, columns.count, first.data(), last.data());
  const double lo = *std::min_element(first.begin(), first.end());
  const double hi = *std::max_element(last.begin(), last.end());
  const auto base = static_cast<std::int64_t>(lo);
  const auto span = static_cast<std::size_t>(static_cast<std::int64_t>(hi) - base + 1);
  std::vector<std::uint64_t> bits((span + 63) / 64, 0);
  for (std::size_t i = 0; i < columns.count; ++i) {
    const auto a = static_cast<std::size_t>(static_cast<std::int64_t>(first[i]) - base);
    const auto b = static_cast<std::size_t>(static_cast<std::int64_t>(last[i]) - base);
    for (std::size_t j = a; j <= b; ++j) bits[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  return {base, std::move(bits)};
}

}  // namespace

GridCover project_cover(const CoverColumns& columns, const Direction& e) {
  const auto [base, bits] = projection_bitmap(columns, e);
  std::vector<std::int32_t> cells;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      const int bit = std::countr_zero(word);
      cells.push_back(static_cast<std::int32_t>(base + static_cast<std::int64_t>(w * 64 + bit)));
      word &= word - 1;
    }
  }
  return GridCover(columns.precision, 1, std::move(cells));
}

GridCover project_cover(const GridCover& cover, const Direction& e) {
  return project_cover(CoverColumns(cover), e);
}

std::uint64_t count_projection(const CoverColumns& columns, const Direction& e) {
  const auto [base, bits] = projection_bitmap(columns, e);
  return kernels::popcount(bits);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

IfsSpec corners(const std::string& name, std::size_t n, double ratio) {
  IfsSpec ifs;
  ifs.name = name;
  const double far = 1.0 - ratio;
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    RealVector t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = ((b >> (n - 1 - k)) & 1) ? far : 0.0;
    ifs.maps.push_back(SimilarityMap::scaling(ratio, t));
  }
  return ifs;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](IfsSpec ifs, std::string description,
                 std::vector<std::pair<Direction, double>> exceptional = {}) {
    CatalogEntry entry;
    entry.dimension = similarity_dimension(ifs);
    entry.ifs = std::move(ifs);
    entry.description = std::move(description);
    entry.exceptional = std::move(exceptional);
    out.push_back(std::move(entry));
  };
  const double cantor3 = std::log(2.0) / std::log(3.0);
  const Direction ex(RealVector{1.0, 0.0});
  const Direction ey(RealVector{0.0, 1.0});

  add(corners("cantor3", 1, 1.0 / 3.0), "middle-third Cantor set in [0,1]");
  add(corners("cantor4", 1, 0.25), "ratio-1/4 Cantor set in [0,1]");
  add(corners("fourcorner", 2, 0.25), "four-corner Cantor set C_{1/4} x C_{1/4}",
      {{ex, 0.5}, {ey, 0.5}});
  {
    IfsSpec s;
    s.name = "sierpinski";
    s.maps = {SimilarityMap::scaling(0.5, {0.0, 0.0}), SimilarityMap::scaling(0.5, {0.5, 0.0}),
              SimilarityMap::scaling(0.5, {0.0, 0.5})};
    add(std::move(s), "Sierpinski triangle on the right triangle (0,0),(1,0),(0,1)");
  }
  add(corners("cantor3x3", 2, 1.0 / 3.0), "product C_{1/3} x C_{1/3}",
      {{ex, cantor3}, {ey, cantor3}});
  add(corners("cantordust3", 3, 1.0 / 3.0), "3-D Cantor dust C_{1/3}^3",
      {{Direction(RealVector{1.0, 0.0, 0.0}), cantor3},
       {Direction(RealVector{0.0, 1.0, 0.0}), cantor3},
       {Direction(RealVector{0.0, 0.0, 1.0}), cantor3}});
  add(corners("unitsquare", 2, 0.5), "unit square [0,1]^2 as four half-scale copies");
  {
    IfsSpec s;
    s.name = "cantor3_line";
    s.maps = {SimilarityMap::scaling(1.0 / 3.0, {0.0, 0.0}),
              SimilarityMap::scaling(1.0 / 3.0, {2.0 / 3.0, 0.0})};
    add(std::move(s), "middle-third Cantor set embedded as C x {0}", {{ey, 0.0}});
  }
  {
    IfsSpec s;
    s.name = "point";
    s.maps = {SimilarityMap::scaling(0.5, {0.0, 0.0})};
    add(std::move(s), "single point at the origin of R^2");
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.ifs.name == name) return e;
  }
  throw NotFound("no catalog entry named '" + name + "'");
}

}  // namespace fraclab
