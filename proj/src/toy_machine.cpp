#include "fraclab/toy_machine.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fraclab/error.hpp"
#include "fraclab/parallel.hpp"

namespace fraclab {

std::string ToyProgram::to_string() const {
  std::string s;
  for (int k = 0; k < length; ++k) s.push_back(((bits >> (length - 1 - k)) & 1) ? '1' : '0');
  return s;
}

ToyProgram ToyProgram::parse(std::string_view text) {
  require(text.size() <= 32, "toy programs are at most 32 bits");
  ToyProgram p;
  for (char c : text) {
    require(c == '0' || c == '1', "toy program text must be 0/1 characters");
    p.bits = (p.bits << 1) | static_cast<std::uint32_t>(c == '1');
  }
  p.length = static_cast<int>(text.size());
  return p;
}

std::string elias_gamma(std::uint64_t k) {
  require(k >= 1, "Elias gamma codes positive integers only");
  const int width = std::bit_width(k);
  std::string s(static_cast<std::size_t>(width - 1), '0');
  for (int b = width - 1; b >= 0; --b) s.push_back(((k >> b) & 1) ? '1' : '0');
  return s;
}

namespace {

class BitCursor {
 public:
  explicit BitCursor(std::string_view bits) : bits_(bits) {}

  bool done() const { return pos_ == bits_.size(); }

  std::optional<int> bit() {
    if (pos_ >= bits_.size()) return std::nullopt;
    return bits_[pos_++] == '1' ? 1 : 0;
  }

  std::optional<std::uint64_t> gamma() {
    int zeros = 0;
    while (true) {
      const auto b = bit();
      if (!b) return std::nullopt;
      if (*b == 1) break;
      if (++zeros > 62) return std::nullopt;
    }
    std::uint64_t v = 1;
    for (int i = 0; i < zeros; ++i) {
      const auto b = bit();
      if (!b) return std::nullopt;
      v = (v << 1) | static_cast<std::uint64_t>(*b);
    }
    return v;
  }

  // w-bit two's complement.
  std::optional<std::int64_t> signed_bits(int w) {
    std::uint64_t v = 0;
    for (int i = 0; i < w; ++i) {
      const auto b = bit();
      if (!b) return std::nullopt;
      v = (v << 1) | static_cast<std::uint64_t>(*b);
    }
    if (w > 0 && ((v >> (w - 1)) & 1)) return static_cast<std::int64_t>(v) - (std::int64_t{1} << w);
    return static_cast<std::int64_t>(v);
  }

 private:
  std::string_view bits_;
  std::size_t pos_ = 0;
};

constexpr std::uint64_t kMaxCodedDimension = 64;
constexpr std::uint64_t kMaxCodedPrecision = 60;

std::optional<DyadicPoint> read_reference(BitCursor& in) {
  const auto n = in.gamma();
  if (!n || *n > kMaxCodedDimension) return std::nullopt;
  const auto r1 = in.gamma();
  if (!r1 || *r1 - 1 > kMaxCodedPrecision) return std::nullopt;
  const int r = static_cast<int>(*r1 - 1);
  std::vector<std::int64_t> m(*n);
  for (auto& v : m) {
    const auto x = in.signed_bits(r);
    if (!x) return std::nullopt;
    v = *x;
  }
  return DyadicPoint(std::move(m), r);
}

int gamma_length(std::uint64_t k) { return 2 * (std::bit_width(k) - 1) + 1; }

}  // namespace

std::string reference_encoding(const DyadicPoint& p) {
  const int r = p.precision();
  require(static_cast<std::uint64_t>(r) <= kMaxCodedPrecision, "precision too large to encode");
  std::string s = elias_gamma(p.dimension()) + elias_gamma(static_cast<std::uint64_t>(r) + 1);
  for (auto m : p.mantissas()) {
    require(r > 0 ? (m >= -(std::int64_t{1} << (r - 1)) && m < (std::int64_t{1} << (r - 1))) : m == 0,
            "point lies outside the encodable window [-1/2, 1/2)");
    const auto u = static_cast<std::uint64_t>(m);
    for (int b = r - 1; b >= 0; --b) s.push_back(((u >> b) & 1) ? '1' : '0');
  }
  return s;
}

std::optional<DyadicPoint> parse_reference(std::string_view bits) {
  BitCursor in(bits);
  auto p = read_reference(in);
  if (!p || !in.done()) return std::nullopt;
  return p;
}

ToyMachine::ToyMachine(MachineKind kind, int max_length, std::vector<DyadicPoint> dictionary)
    : kind_(kind), max_length_(max_length), dictionary_(std::move(dictionary)) {
  require(max_length >= 0, "L_max must be >= 0");
  if (max_length > kMaxProgramLength) {
    throw LimitExceeded("L_max " + std::to_string(max_length) + " exceeds the enumeration limit of " +
                        std::to_string(kMaxProgramLength));
  }
}

ToyMachine ToyMachine::reference(int max_length) { return ToyMachine(MachineKind::reference, max_length, {}); }

ToyMachine ToyMachine::standard(int max_length, std::vector<DyadicPoint> dictionary) {
  return ToyMachine(MachineKind::standard, max_length, std::move(dictionary));
}

std::optional<DyadicPoint> ToyMachine::decode(const ToyProgram& program, const Oracle& oracle) const {
  std::optional<DyadicPoint> point;
  if (kind_ == MachineKind::standard && !oracle.bits.empty()) point = parse_reference(oracle.bits);
  return decode(program, point);
}

std::optional<DyadicPoint> ToyMachine::decode(const ToyProgram& program,
                                              const std::optional<DyadicPoint>& oracle_point) const {
  const std::string text = program.to_string();
  BitCursor in(text);
  std::optional<DyadicPoint> out;
  if (kind_ == MachineKind::reference) {
    out = read_reference(in);
  } else {
    const auto op = in.bit();
    if (!op) return std::nullopt;
    if (*op == 0) {
      out = read_reference(in);
    } else {
      const auto b1 = in.bit();
      if (!b1) return std::nullopt;
      if (*b1 == 0) {
        out = oracle_point;
      } else {
        const auto b2 = in.bit();
        if (!b2) return std::nullopt;
        if (*b2 == 0) {
          if (!oracle_point) return std::nullopt;
          const auto p1 = in.gamma();
          if (!p1 || *p1 - 1 > kMaxCodedPrecision) return std::nullopt;
          const auto w1 = in.gamma();
          if (!w1 || *w1 - 1 > 62) return std::nullopt;
          const int w = static_cast<int>(*w1 - 1);
          std::vector<std::int64_t> m(oracle_point->dimension());
          for (auto& v : m) {
            const auto x = in.signed_bits(w);
            if (!x) return std::nullopt;
            v = *x;
          }
          out = *oracle_point + DyadicPoint(std::move(m), static_cast<int>(*p1 - 1));
        } else {
          const auto b3 = in.bit();
          if (!b3 || *b3 == 1) return std::nullopt;
          const auto k = in.gamma();
          if (!k || *k > dictionary_.size()) return std::nullopt;
          out = dictionary_[*k - 1];
        }
      }
    }
  }
  if (!out || !in.done()) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------

ComplexityTable::ComplexityTable(int max_length, std::vector<Witness> witnesses)
    : max_length_(max_length), entries_(std::move(witnesses)) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const Witness& a, const Witness& b) {
    return a.length != b.length ? a.length < b.length : a.program.bits < b.program.bits;
  });
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const bool fresh = index_.emplace(entries_[i].point, i).second;
    require(fresh, "complexity table holds a point twice");
  }
}

std::optional<Witness> ComplexityTable::lookup(const DyadicPoint& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second];
}

namespace {

bool in_open_ball(const DyadicPoint& p, std::span<const double> x, double radius) {
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = p.coordinate(i) - x[i];
    ss += d * d;
  }
  return ss < radius * radius;
}

}  // namespace

std::optional<Witness> ComplexityTable::K_r(std::span<const double> x, int r) const {
  const double radius = std::ldexp(1.0, -r);
  for (const auto& w : entries_) {
    if (w.point.dimension() == x.size() && in_open_ball(w.point, x, radius)) return w;
  }
  return std::nullopt;
}

double ComplexityTable::kraft_sum() const {
  double s = 0.0;
  for (const auto& w : entries_) s += std::ldexp(1.0, -w.length);
  return s;
}

void ComplexityTable::write_csv(std::ostream& out) const {
  std::size_t n = 0;
  for (const auto& w : entries_) n = std::max(n, w.point.dimension());
  out << "program_bits,length";
  for (std::size_t i = 0; i < n; ++i) out << ",point_" << i;
  out << '\n';
  const auto precision = out.precision(17);
  for (const auto& w : entries_) {
    out << w.program.to_string() << ',' << w.length;
    for (std::size_t i = 0; i < w.point.dimension(); ++i) out << ',' << w.point.coordinate(i);
    out << '\n';
  }
  out.precision(precision);
}

ComplexityTable exact_K(const ToyMachine& machine, const Oracle& oracle) {
  const int L = machine.max_length();
  if (L > kMaxProgramLength) {
    throw LimitExceeded("L_max " + std::to_string(L) + " exceeds the enumeration limit of " +
                        std::to_string(kMaxProgramLength));
  }
  std::optional<DyadicPoint> oracle_point;
  if (machine.kind() == MachineKind::standard && !oracle.bits.empty()) {
    oracle_point = parse_reference(oracle.bits);
  }
  // One stratum per length; the merge keeps the first (shortest, then lexicographic) hit.
  std::vector<std::vector<Witness>> strata(static_cast<std::size_t>(L) + 1);
  parallel_for(strata.size(), [&](std::size_t len) {
    std::unordered_map<DyadicPoint, bool, DyadicPointHash> seen;
    auto& out = strata[len];
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t b = 0; b < count; ++b) {
      const ToyProgram prog{static_cast<std::uint32_t>(b), static_cast<int>(len)};
      auto p = machine.decode(prog, oracle_point);
      if (!p) continue;
      DyadicPoint np = p->normalized();
      if (seen.emplace(np, true).second) out.push_back({static_cast<int>(len), prog, std::move(np)});
    }
  });
  std::vector<Witness> merged;
  std::unordered_map<DyadicPoint, bool, DyadicPointHash> seen;
  for (auto& stratum : strata) {
    for (auto& w : stratum) {
      if (seen.emplace(w.point, true).second) merged.push_back(std::move(w));
    }
  }
  return ComplexityTable(L, std::move(merged));
}

// ---------------------------------------------------------------------------

ToyUniverse::ToyUniverse(ToyMachine machine) : machine_(std::move(machine)), table_(exact_K(machine_)) {}

const ComplexityTable& ToyUniverse::relative(const Oracle& oracle) {
  if (oracle.bits.empty()) return table_;
  auto& slot = relative_[oracle.bits];
  if (!slot) slot = std::make_unique<ComplexityTable>(exact_K(machine_, oracle));
  return *slot;
}

std::optional<int> ToyUniverse::K(const DyadicPoint& p) const {
  const auto w = table_.lookup(p.normalized());
  if (!w) return std::nullopt;
  return w->length;
}

std::optional<int> ToyUniverse::K_r(std::span<const double> x, int r) const {
  const auto w = table_.K_r(x, r);
  if (!w) return std::nullopt;
  return w->length;
}

std::optional<int> ToyUniverse::K_r_given(std::span<const double> x, int r, const DyadicPoint& q) const {
  std::optional<int> best = K_r(x, r);
  if (machine_.kind() != MachineKind::standard || q.dimension() != x.size()) return best;
  auto improve = [&](int cost) {
    if (cost <= machine_.max_length() && (!best || cost < *best)) best = cost;
  };
  const double radius = std::ldexp(1.0, -r);
  if (in_open_ball(q, x, radius)) improve(2);

  const int L = machine_.max_length();
  const std::size_t n = x.size();
  for (int rho = 0; 3 + gamma_length(static_cast<std::uint64_t>(rho) + 1) + 1 <= L; ++rho) {
    const double scale = std::ldexp(1.0, rho);
    for (int w = 0;; ++w) {
      const int cost = 3 + gamma_length(static_cast<std::uint64_t>(rho) + 1) +
                       gamma_length(static_cast<std::uint64_t>(w) + 1) + static_cast<int>(n) * w;
      if (cost > L || (best && cost >= *best)) break;
      const double lo = w > 0 ? -std::ldexp(1.0, w - 1) : 0.0;
      const double hi = w > 0 ? std::ldexp(1.0, w - 1) - 1.0 : 0.0;
      double ss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double ideal = (x[i] - q.coordinate(i)) * scale;
        double dbest = INFINITY;
        for (double m : {std::floor(ideal), std::ceil(ideal)}) {
          m = std::clamp(m, lo, hi);
          const double d = q.coordinate(i) + m / scale - x[i];
          dbest = std::min(dbest, d * d);
        }
        ss += dbest;
      }
      if (ss < radius * radius) {
        improve(cost);
        break;
      }
    }
  }
  return best;
}

std::optional<int> ToyUniverse::conditional_K_r_s(std::span<const double> x, int r,
                                                  std::span<const double> y, int s) const {
  const double radius = std::ldexp(1.0, -s);
  std::optional<int> worst;
  bool any = false;
  for (const auto& w : table_.entries()) {
    if (w.point.dimension() != y.size() || !in_open_ball(w.point, y, radius)) continue;
    any = true;
    const auto k = K_r_given(x, r, w.point);
    if (!k) return std::nullopt;
    worst = std::max(worst.value_or(0), *k);
  }
  if (!any) return std::nullopt;
  return worst;
}

// ---------------------------------------------------------------------------

ClampedComplexity::ClampedComplexity(const ComplexityTable& base, RealVector z, double eta, int r)
    : base_(&base), z_(std::move(z)), r_(r) {
  require(eta > 0.0 && eta < 1.0, "clamp needs eta in (0,1)");
  require(r >= 0, "clamp needs r >= 0");
  clamp_ = static_cast<int>(std::ceil(eta * r - 1e-12));
  const auto kz = base.K_r(z_, r);
  vacuous_ = !kz || clamp_ > kz->length;
}

std::optional<int> ClampedComplexity::K_t(std::span<const double> x, int t) const {
  const auto w = base_->K_r(x, t);
  const bool at_z = x.size() == z_.size() && std::equal(x.begin(), x.end(), z_.begin());
  if (!at_z || t > r_) {
    if (!w) return std::nullopt;
    return w->length;
  }
  return w ? std::min(clamp_, w->length) : clamp_;
}

ClampedComplexity clamp_oracle(const ComplexityTable& base, RealVector z, double eta, int r) {
  return ClampedComplexity(base, std::move(z), eta, r);
}

std::optional<Witness> recover_point(const ComplexityTable& table, double q, const Direction& e, int s,
                                     double budget, const std::optional<RealVector>& hint) {
  const double radius = std::ldexp(1.0, -s);
  for (const auto& w : table.entries()) {
    if (w.length > budget + 1e-9) break;
    if (w.point.dimension() != e.dimension()) continue;
    const RealVector p = w.point.to_real();
    if (!(std::abs(dot(e, p) - q) < radius)) continue;
    if (hint && !(distance(p, *hint) < 0.5)) continue;
    return w;
  }
  return std::nullopt;
}

}  // namespace fraclab
