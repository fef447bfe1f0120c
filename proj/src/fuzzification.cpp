#include "mcda/fuzzification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcda/errors.hpp"

namespace mcda {

int class_count_for_weight(double alpha, const ClassCountRule& rule) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("representative weight " + std::to_string(alpha) + " outside [0, 1]");
  }
  if (!rule.valid()) {
    throw DomainError("class-count thresholds must be strictly increasing within (0, 1)");
  }
  if (alpha < rule.thresholds[0]) return 3;
  if (alpha < rule.thresholds[1]) return 5;
  if (alpha < rule.thresholds[2]) return 7;
  return 9;
}

RangeValue crisp_to_range(std::span<const double> values) {
  if (values.empty()) throw DataError("no assessments to build a range from");
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return RangeValue{*lo, *hi};
}

double Frame::point(int i) const {
  if (i == 0) return lo;
  if (i == 2 * class_count) return hi;
  return grid[static_cast<std::size_t>(i) - 1];
}

double Frame::class_peak(int k) const { return point(2 * k + 1); }

std::pair<double, double> Frame::class_support(int k) const {
  double support_lo = (k == 0) ? lo : point(2 * k - 1);
  double support_hi = (k == class_count - 1) ? hi : point(2 * k + 3);
  return {support_lo, support_hi};
}

PiecewiseLinear Frame::class_function(int k) const {
  if (k < 0 || k >= class_count) throw DomainError("class index out of range");
  if (k == 0) {
    return PiecewiseLinear({lo, point(1), point(3)}, {1.0, 1.0, 0.0});
  }
  if (k == class_count - 1) {
    int n2 = 2 * class_count;
    return PiecewiseLinear({point(n2 - 3), point(n2 - 1), hi}, {0.0, 1.0, 1.0});
  }
  return PiecewiseLinear({point(2 * k - 1), point(2 * k + 1), point(2 * k + 3)},
                         {0.0, 1.0, 0.0});
}

std::vector<PerformanceTerm> centered_class_labels(int class_count) {
  int first = (kPerformanceTermCount - class_count) / 2;
  std::vector<PerformanceTerm> labels;
  labels.reserve(static_cast<std::size_t>(class_count));
  for (int i = 0; i < class_count; ++i) {
    labels.push_back(static_cast<PerformanceTerm>(first + i));
  }
  return labels;
}

Frame build_frame_over(double lo, double hi, int class_count) {
  if (class_count != 3 && class_count != 5 && class_count != 7 && class_count != 9) {
    throw DomainError("class count must be one of 3, 5, 7, 9");
  }
  if (!(lo < hi)) {
    throw ComputeError("degenerate frame: universe of discourse has zero span");
  }
  Frame frame;
  frame.lo = lo;
  frame.hi = hi;
  frame.class_count = class_count;
  int steps = 2 * class_count;
  frame.grid.reserve(static_cast<std::size_t>(steps - 1));
  for (int i = 1; i < steps; ++i) {
    frame.grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps));
  }
  double previous = lo;
  for (double point : frame.grid) {
    if (!(point > previous)) {
      throw ComputeError("degenerate frame: span too small to resolve the class grid");
    }
    previous = point;
  }
  if (!(hi > previous)) {
    throw ComputeError("degenerate frame: span too small to resolve the class grid");
  }
  frame.classes = centered_class_labels(class_count);
  return frame;
}

Frame build_frame(std::span<const double> values, int class_count) {
  if (values.size() < 2) throw DataError("need at least two assessments to build a frame");
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return build_frame_over(*lo, *hi, class_count);
}

double membership_at(const Frame& frame, int class_index, double x) {
  if (class_index < 0 || class_index >= frame.class_count) {
    throw DomainError("class index out of range");
  }
  if (x < frame.lo || x > frame.hi) {
    throw DomainError("point " + std::to_string(x) + " outside the frame");
  }
  int n = frame.class_count;
  if (class_index == 0) {
    double a1 = frame.point(1);
    double a3 = frame.point(3);
    if (x <= a1) return 1.0;
    return std::max(0.0, (a3 - x) / (a3 - a1));
  }
  if (class_index == n - 1) {
    double lead = frame.point(2 * n - 3);
    double peak = frame.point(2 * n - 1);
    if (x >= peak) return 1.0;
    return std::max(0.0, (x - lead) / (peak - lead));
  }
  double left = frame.point(2 * class_index - 1);
  double peak = frame.point(2 * class_index + 1);
  double right = frame.point(2 * class_index + 3);
  return std::max(0.0, std::min((x - left) / (peak - left), (right - x) / (right - peak)));
}

double range_membership(const Frame& frame, int class_index, const RangeValue& r) {
  if (r.lo > r.hi) throw DomainError("range with lo > hi");
  if (r.lo < frame.lo || r.hi > frame.hi) {
    throw DomainError("range outside the frame");
  }
  if (r.lo == r.hi) return membership_at(frame, class_index, r.lo);

  auto [support_lo, support_hi] = frame.class_support(class_index);
  double cut_lo = std::max(r.lo, support_lo);
  double cut_hi = std::min(r.hi, support_hi);
  if (cut_hi < cut_lo) return 0.0;
  if (cut_hi == cut_lo) return membership_at(frame, class_index, cut_lo);

  double area = frame.class_function(class_index).integral(r.lo, r.hi);
  return area / (cut_hi - cut_lo);
}

}  // namespace mcda
