#pragma once

// An independent generator for the toy machines: builds every program from its
// grammar instead of decoding bit strings.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fraclab/toy_machine.hpp"

namespace toy_grammar {

using namespace fraclab;

inline std::string gamma_code(std::uint64_t k) {
  std::string bin;
  for (std::uint64_t v = k; v; v >>= 1) bin.insert(bin.begin(), char('0' + (v & 1)));
  return std::string(bin.size() - 1, '0') + bin;
}

inline std::string twos(std::int64_t m, int w) {
  std::string s;
  for (int b = w - 1; b >= 0; --b) s.push_back(((static_cast<std::uint64_t>(m) >> b) & 1) ? '1' : '0');
  return s;
}

using Point = std::vector<double>;  // exact: every coordinate is a short dyadic

// Calls emit(program, point) for every mantissa vector of n coordinates at width w.
template <class Emit>
void each_mantissa(std::size_t n, int w, const std::string& prefix, std::size_t budget, Emit&& emit,
                   std::vector<std::int64_t>& m) {
  if (prefix.size() > budget) return;
  if (m.size() == n) {
    emit(prefix, m);
    return;
  }
  const std::int64_t lo = w > 0 ? -(std::int64_t{1} << (w - 1)) : 0;
  const std::int64_t hi = w > 0 ? (std::int64_t{1} << (w - 1)) : 1;
  for (std::int64_t v = lo; v < hi; ++v) {
    m.push_back(v);
    each_mantissa(n, w, prefix + twos(v, w), budget, emit, m);
    m.pop_back();
  }
}

inline std::map<Point, int> generated_K(bool standard, int L, const std::optional<Point>& oracle,
                                 const std::vector<Point>& dictionary) {
  std::map<Point, int> best;
  auto offer = [&](const std::string& prog, const Point& p) {
    if (static_cast<int>(prog.size()) > L) return;
    auto [it, fresh] = best.emplace(p, static_cast<int>(prog.size()));
    if (!fresh) it->second = std::min(it->second, static_cast<int>(prog.size()));
  };
  const std::string ref_op = standard ? "0" : "";
  for (std::size_t n = 1; gamma_code(n).size() + ref_op.size() + 1 <= static_cast<std::size_t>(L); ++n) {
    for (int r = 0;; ++r) {
      const std::string head = ref_op + gamma_code(n) + gamma_code(r + 1);
      if (head.size() + n * r > static_cast<std::size_t>(L)) break;
      std::vector<std::int64_t> m;
      each_mantissa(n, r, head, L, [&](const std::string& prog, const std::vector<std::int64_t>& mm) {
        Point p;
        for (auto v : mm) p.push_back(std::ldexp(static_cast<double>(v), -r));
        offer(prog, p);
      }, m);
    }
  }
  if (!standard) return best;
  if (oracle) {
    offer("10", *oracle);
    for (int rho = 0;; ++rho) {
      const std::string h1 = "110" + gamma_code(rho + 1);
      if (h1.size() + 1 > static_cast<std::size_t>(L)) break;
      for (int w = 0;; ++w) {
        const std::string head = h1 + gamma_code(w + 1);
        if (head.size() + oracle->size() * w > static_cast<std::size_t>(L)) break;
        std::vector<std::int64_t> m;
        each_mantissa(oracle->size(), w, head, L, [&](const std::string& prog, const std::vector<std::int64_t>& mm) {
          Point p = *oracle;
          for (std::size_t i = 0; i < p.size(); ++i) p[i] += std::ldexp(static_cast<double>(mm[i]), -rho);
          offer(prog, p);
        }, m);
      }
    }
  }
  for (std::size_t k = 1; k <= dictionary.size(); ++k) offer("1110" + gamma_code(k), dictionary[k - 1]);
  return best;
}

inline std::map<Point, int> table_as_map(const ComplexityTable& t) {
  std::map<Point, int> out;
  for (const auto& w : t.entries()) out[w.point.to_real()] = w.length;
  return out;
}

}  // namespace toy_grammar
