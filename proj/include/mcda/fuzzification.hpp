#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "mcda/fuzzy.hpp"
#include "mcda/piecewise.hpp"

namespace mcda {

// Step map from a representative criterion weight to an odd class count.
// Bands: [0, t0) -> 3, [t0, t1) -> 5, [t1, t2) -> 7, [t2, 1] -> 9.
struct ClassCountRule {
  std::array<double, 3> thresholds{0.3, 0.5, 0.75};

  bool valid() const {
    return thresholds[0] > 0.0 && thresholds[0] < thresholds[1] &&
           thresholds[1] < thresholds[2] && thresholds[2] < 1.0;
  }
};

int class_count_for_weight(double alpha, const ClassCountRule& rule = {});

// Min/max envelope of one supplier's crisp assessments on one criterion.
struct RangeValue {
  double lo = 0.0;
  double hi = 0.0;

  double midpoint() const { return 0.5 * (lo + hi); }
  friend bool operator==(const RangeValue&, const RangeValue&) = default;
};

// (min, max) of a nonempty list; decision-maker weights are deliberately
// not applied here.
RangeValue crisp_to_range(std::span<const double> values);

// Fuzzified universe of discourse of one numerical criterion: a uniform grid
// over [lo, hi] carrying `class_count` overlapping linguistic classes.
//
// Grid points a_1 .. a_{2n-1} split [lo, hi] into 2n equal steps. Class k
// (0-based) peaks at a_{2k+1}; interior classes are symmetric triangles over
// four steps, the first and last class plateau between the frame edge and
// their peak.
struct Frame {
  double lo = 0.0;
  double hi = 0.0;
  int class_count = 0;
  std::vector<double> grid;                // a_1 .. a_{2n-1}
  std::vector<PerformanceTerm> classes;    // ordered labels, one per class

  // a_i for i = 0 .. 2n (0 -> lo, 2n -> hi).
  double point(int i) const;
  double class_peak(int k) const;
  std::pair<double, double> class_support(int k) const;
  PiecewiseLinear class_function(int k) const;
};

// Centered run of the 9-term performance ladder, e.g. 7 -> B .. VVG.
std::vector<PerformanceTerm> centered_class_labels(int class_count);

// Frame spanning [min(values), max(values)]. Throws ComputeError when all
// values coincide, DomainError for an unsupported class count.
Frame build_frame(std::span<const double> values, int class_count);

// Frame over an explicit span, for configured universe overrides.
Frame build_frame_over(double lo, double hi, int class_count);

// Membership of a crisp in-frame point in one class. DomainError when x is
// outside the frame or the class index is invalid.
double membership_at(const Frame& frame, int class_index, double x);

// Mean membership of a range: exact integral of the class function over the
// range divided by the length of (range ∩ class support); zero when that
// intersection is empty, membership_at for a point range.
double range_membership(const Frame& frame, int class_index, const RangeValue& r);

}  // namespace mcda
