#pragma once

// Shared helpers for the test suites: a deterministic generator, a trapezoid
// quadrature oracle, and independent brute-force recomputations kept apart
// from the library code paths they check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace testsupport {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  if (b <= a) return 0.0;
  double h = (b - a) / n;
  double total = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) total += f(a + i * h);
  return total * h;
}

// Kendall rank correlation (tau-a) between two rank vectors.
inline double kendall_tau(const std::vector<int>& r1, const std::vector<int>& r2) {
  int concordant = 0, discordant = 0;
  std::size_t n = r1.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = (r1[i] - r1[j]) * (r2[i] - r2[j]);
      if (a > 0) ++concordant;
      if (a < 0) ++discordant;
    }
  }
  return static_cast<double>(concordant - discordant) /
         (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace testsupport
