#pragma once

// Deterministic pseudo-random generators for tests (fixed-seed splitmix64;
// the library itself has no randomness anywhere).

#include <cstdint>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/szego.hpp"

namespace testutil {

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int index(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  opuc::cx disk(double rmax = 0.85) {
    double r = rmax * std::sqrt(uniform());
    return r * opuc::unit(opuc::kTwoPi * uniform());
  }

  opuc::cx circle() { return opuc::unit(opuc::kTwoPi * uniform()); }

  std::vector<opuc::cx> disk_points(int count, double rmax = 0.85) {
    std::vector<opuc::cx> v(static_cast<size_t>(count));
    for (auto& z : v) z = disk(rmax);
    return v;
  }

  opuc::VerblunskyWord word(int m, double rmax = 0.85) {
    return opuc::VerblunskyWord::interior(disk_points(m, rmax));
  }
};

inline double coeff_distance(const opuc::Poly& a, const opuc::Poly& b) {
  double worst = 0.0;
  size_t n = std::max(a.size(), b.size());
  for (size_t k = 0; k < n; ++k) {
    opuc::cx av = k < a.size() ? a[k] : opuc::cx(0.0);
    opuc::cx bv = k < b.size() ? b[k] : opuc::cx(0.0);
    worst = std::max(worst, std::abs(av - bv));
  }
  return worst;
}

}  // namespace testutil
