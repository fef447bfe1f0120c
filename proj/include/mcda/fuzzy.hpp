#pragma once

#include <array>
#include <string_view>

namespace mcda {

// Truth / indeterminacy / falsity triple, each component in [0, 1].
struct Svn {
  double truth = 0.0;
  double indeterminacy = 0.0;
  double falsity = 0.0;

  bool valid() const;
  friend bool operator==(const Svn&, const Svn&) = default;
};

// Triangular interval-valued fuzzy number. The outer pair (lo, hi) bounds
// the support of the upper membership, the inner pair bounds the lower one,
// and both share a single peak:
//   lo <= lo_inner <= peak <= hi_inner <= hi
struct Ivfs {
  double lo = 0.0;
  double lo_inner = 0.0;
  double peak = 0.0;
  double hi_inner = 0.0;
  double hi = 0.0;

  bool valid() const;
  std::array<double, 5> components() const { return {lo, lo_inner, peak, hi_inner, hi}; }
  static Ivfs from_components(const std::array<double, 5>& c);
  friend bool operator==(const Ivfs&, const Ivfs&) = default;
};

// Importance vocabulary used for decision makers and criteria.
enum class WeightTerm { VUI, UI, M, I, VI };

// Performance vocabulary used for supplier appraisals, worst to best.
enum class PerformanceTerm { VB, B, MB, M, MG, G, VG, VVG, EG };

inline constexpr int kWeightTermCount = 5;
inline constexpr int kPerformanceTermCount = 9;

std::string_view to_string(WeightTerm t);
std::string_view to_string(PerformanceTerm t);

// Throw LexiconError naming the token when the code is not in the vocabulary.
WeightTerm parse_weight_term(std::string_view code);
PerformanceTerm parse_performance_term(std::string_view code);

// Tabulated fuzzy numbers for each vocabulary entry.
Svn weight_svn(WeightTerm t);
Svn performance_svn(PerformanceTerm t);
Ivfs weight_ivfs(WeightTerm t);
Ivfs performance_ivfs(PerformanceTerm t);

// (x.a*y.a, x.b + y.b - x.b*y.b, x.c + y.c - x.c*y.c).
// (1,0,0) is the identity, (0,1,1) the annihilator.
Svn svn_product(const Svn& x, const Svn& y);

enum class IvfsOp { add, subtract, multiply, divide };

// Componentwise combination with the inner/outer pairing
// (v1*u1, v1'*u1'); v2*u2; (v3'*u3', v3*u3).
// Throws ComputeError when a divisor component is zero or when the result
// violates the ordering invariant (possible for subtract and divide).
Ivfs ivfs_combine(const Ivfs& v, const Ivfs& u, IvfsOp op);

// Componentwise scaling by a nonnegative factor.
Ivfs ivfs_scale(const Ivfs& v, double factor);

}  // namespace mcda
