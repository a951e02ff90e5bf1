#pragma once

// A finite prefix-free machine over bit strings of length <= L_max, small
// enough that every complexity quantity is an exhaustive minimum.
//
// Reference encoding of a point (n, r, m_1..m_n):
//   gamma(n) gamma(r + 1) then n r-bit two's-complement mantissas,
// so coordinates lie in [-1/2, 1/2) on the 2^-r grid. gamma is Elias gamma.
//
// The standard machine reads an opcode first:
//   0    REF                       the encoded point
//   10                             the oracle point
//   110  gamma(p+1) gamma(w+1) M   oracle + m 2^-p, m: n w-bit two's complement
//   1110 gamma(k)                  dictionary entry k
//   1111                           never halts
// The oracle is a bit string holding a reference encoding (or nothing).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fraclab/geometry.hpp"

namespace fraclab {

inline constexpr int kMaxProgramLength = 24;
inline constexpr int kDefaultProgramLength = 16;

struct ToyProgram {
  std::uint32_t bits = 0;  // bit k of the program is (bits >> (length - 1 - k)) & 1
  int length = 0;

  std::string to_string() const;
  static ToyProgram parse(std::string_view text);
  bool operator==(const ToyProgram&) const = default;
};

// Elias gamma code of k >= 1.
std::string elias_gamma(std::uint64_t k);
// Reference encoding of p at its own precision (callers normalize if they want the shortest).
std::string reference_encoding(const DyadicPoint& p);
// Inverse of reference_encoding; nullopt unless `bits` is exactly one encoding.
std::optional<DyadicPoint> parse_reference(std::string_view bits);

struct Oracle {
  std::string bits;

  static Oracle of_point(const DyadicPoint& p) { return {reference_encoding(p.normalized())}; }
  bool operator==(const Oracle&) const = default;
};

enum class MachineKind { reference, standard };

class ToyMachine {
 public:
  static ToyMachine reference(int max_length = kDefaultProgramLength);
  static ToyMachine standard(int max_length = kDefaultProgramLength,
                             std::vector<DyadicPoint> dictionary = {});

  MachineKind kind() const { return kind_; }
  int max_length() const { return max_length_; }
  const std::vector<DyadicPoint>& dictionary() const { return dictionary_; }

  // Total: nullopt is the divergent outcome. Programs must be read exactly to their end.
  std::optional<DyadicPoint> decode(const ToyProgram& program, const Oracle& oracle = {}) const;
  std::optional<DyadicPoint> decode(const ToyProgram& program,
                                    const std::optional<DyadicPoint>& oracle_point) const;

 private:
  ToyMachine(MachineKind kind, int max_length, std::vector<DyadicPoint> dictionary);

  MachineKind kind_;
  int max_length_;
  std::vector<DyadicPoint> dictionary_;
};

struct Witness {
  int length = 0;
  ToyProgram program;
  DyadicPoint point;  // normalized
};

/// Minimal program length for every point the machine produces within L_max.
class ComplexityTable {
 public:
  ComplexityTable(int max_length, std::vector<Witness> witnesses);

  int max_length() const { return max_length_; }
  // Sorted by (length, program bits): the shortest-first, lexicographic order.
  const std::vector<Witness>& entries() const { return entries_; }
  std::optional<Witness> lookup(const DyadicPoint& p) const;

  // min K(p) over producible p with |p - x| < 2^-r (open ball), same dimension as x.
  std::optional<Witness> K_r(std::span<const double> x, int r) const;
  // Sum over minimal programs of 2^-length.
  double kraft_sum() const;

  // CSV: program_bits,length,point_0,...  (one row per point)
  void write_csv(std::ostream& out) const;

 private:
  int max_length_;
  std::vector<Witness> entries_;
  std::unordered_map<DyadicPoint, std::size_t, DyadicPointHash> index_;
};

// Exhaustive shortest-first enumeration of all 2^(L_max+1) - 1 programs.
// Throws LimitExceeded when L_max > 24.
ComplexityTable exact_K(const ToyMachine& machine, const Oracle& oracle = {});

/// A machine with its unconditional table and lazily built conditional tables.
class ToyUniverse {
 public:
  explicit ToyUniverse(ToyMachine machine);

  const ToyMachine& machine() const { return machine_; }
  const ComplexityTable& table() const { return table_; }
  // exact_K under the oracle, cached per oracle string.
  const ComplexityTable& relative(const Oracle& oracle);

  std::optional<int> K(const DyadicPoint& p) const;
  std::optional<int> K_r(std::span<const double> x, int r) const;

  // min over p in B_{2^-r}(x) of K(p | q), q passed as the oracle. Equals the
  // value read from relative(Oracle::of_point(q)), computed without enumeration.
  std::optional<int> K_r_given(std::span<const double> x, int r, const DyadicPoint& q) const;

  // max over producible q in B_{2^-s}(y) of K_r_given(x, r, q); nullopt when
  // either ball holds no producible point.
  std::optional<int> conditional_K_r_s(std::span<const double> x, int r, std::span<const double> y,
                                       int s) const;

 private:
  ToyMachine machine_;
  ComplexityTable table_;
  std::map<std::string, std::unique_ptr<ComplexityTable>> relative_;
};

/// K^D of a clamping oracle D for z: K^D_t(z) = min(ceil(eta r), K_t(z)) for t <= r,
/// every other value as in the base table.
class ClampedComplexity {
 public:
  ClampedComplexity(const ComplexityTable& base, RealVector z, double eta, int r);

  // ceil(eta r) exceeds K_r(z) (or K_r(z) is undefined): the clamp changes nothing.
  bool vacuous() const { return vacuous_; }
  int clamp_value() const { return clamp_; }
  std::optional<int> K_t(std::span<const double> x, int t) const;

 private:
  const ComplexityTable* base_;
  RealVector z_;
  int r_;
  int clamp_;
  bool vacuous_;
};

ClampedComplexity clamp_oracle(const ComplexityTable& base, RealVector z, double eta, int r);

// First producible p (shortest-first, lexicographic) with K(p) <= budget,
// |e.p - q| < 2^-s and, if a hint is given, |p - hint| < 1/2.
std::optional<Witness> recover_point(const ComplexityTable& table, double q, const Direction& e, int s,
                                     double budget, const std::optional<RealVector>& hint = std::nullopt);

}  // namespace fraclab
