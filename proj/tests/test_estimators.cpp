#include <doctest.h>

#include <random>
#include <sstream>

#include "fraclab/constants.hpp"
#include "fraclab/error.hpp"
#include "fraclab/estimators.hpp"

using namespace fraclab;

namespace {

std::string random_bits(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::string s(n, '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

// Phrase starts by brute-force substring search.
std::vector<std::size_t> naive_starts(const std::string& s) {
  std::vector<std::size_t> starts;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t best = 0;
    for (std::size_t len = 1; i + len <= s.size(); ++len) {
      const auto at = s.find(s.substr(i, len));
      if (at < i) best = len;
      else break;
    }
    starts.push_back(i);
    i += std::min(best + 1, s.size() - i);
  }
  return starts;
}

}  // namespace

TEST_CASE("parse matches brute-force substring search") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::string s = random_bits(seed, 20 + seed * 7);
    if (seed % 3 == 0) s = s.substr(0, 10) + s.substr(0, 10) + s;
    const auto parse = dictionary_parse(s);
    CHECK(parse.phrase_starts == naive_starts(s));
    double cost = 0.0;
    for (auto p : parse.phrase_starts) cost += std::log2(std::max<double>(p, 1.0)) + 1.0;
    CHECK(parse.bits == doctest::Approx(cost));
  }
}

TEST_CASE("small strings have the expected costs") {
  CHECK(dictionary_complexity("") == 0.0);
  CHECK(dictionary_complexity("1") == 1.0);
  // "0" then one phrase copying from position 0 to the end.
  CHECK(dictionary_complexity(std::string(64, '0')) == 2.0);
  CHECK(dictionary_complexity(random_bits(5, 64)) >= 48.0);
}

TEST_CASE("subadditivity with the frozen logarithmic slack") {
  const double c = default_constants().c_subadd;
  std::mt19937_64 rng(77);
  for (int k = 0; k < 60; ++k) {
    const std::string s = random_bits(rng(), 1 + rng() % 1500);
    const std::string t = (k % 2) ? random_bits(rng(), 1 + rng() % 1500) : std::string(1 + rng() % 900, '1');
    const double slack = c * std::log2(static_cast<double>(s.size() + t.size()));
    CHECK(dictionary_complexity(s + t) <= dictionary_complexity(s) + dictionary_complexity(t) + slack);
  }
}

TEST_CASE("schedule runs from 32 to 4096") {
  const auto sch = profile_schedule();
  CHECK(sch.size() == 36);
  CHECK(sch.front() == 32);
  CHECK(sch.back() == 4096);
  CHECK(std::is_sorted(sch.begin(), sch.end()));
}

TEST_CASE("rational points compress, random points do not") {
  for (auto f : std::vector<Fraction>{{1, 2}, {1, 3}, {2, 7}, {5, 17}, {12345, 196608}}) {
    const auto p = complexity_profile(*rational_point({f}), profile_schedule());
    CHECK(effective_dim(p, EffectiveMode::liminf) <= 0.1);
    CHECK(effective_dim(p, EffectiveMode::liminf) <= effective_dim(p, EffectiveMode::limsup));
  }
  for (std::uint64_t seed : {3, 4, 5}) {
    const auto p = complexity_profile(*random_point(1, seed), profile_schedule());
    const double lo = effective_dim(p, EffectiveMode::liminf);
    const double hi = effective_dim(p, EffectiveMode::limsup);
    CHECK(lo >= 0.9);
    CHECK(hi <= 1.05);
    CHECK(lo <= hi);
  }
}

TEST_CASE("profiles respect headers, schemes and contracts") {
  const auto x = rational_point({{1, 3}, {1, 5}});
  const auto plain = complexity_profile(*x, {64, 128});
  const auto headed = complexity_profile(*x, {64, 128}, EncodingScheme::interleaved, "1101");
  CHECK(plain.dimension == 2);
  CHECK(plain.estimator == std::string(kEstimatorId));
  CHECK(headed.samples[0].k != plain.samples[0].k);
  const auto cat = complexity_profile(*x, {64, 128}, EncodingScheme::concatenated);
  CHECK(cat.samples[1].k == dictionary_complexity(encode_point_bits(*x, 128, EncodingScheme::concatenated).bits));
  CHECK_THROWS_AS(effective_dim(plain, EffectiveMode::liminf), ContractViolation);
  CHECK_THROWS_AS(complexity_profile(*x, {128, 64}), ContractViolation);

  std::ostringstream csv;
  write_profile_csv(csv, plain);
  CHECK(csv.str().rfind("r,k_r\n64,", 0) == 0);
}
