#pragma once

#include <span>
#include <vector>

#include "mcda/fuzzification.hpp"

namespace mcda {

// Per-criterion reliability indices for the fuzzified classes.
struct ReliabilityProfile {
  double r_static = 0.0;         // sum of (1 - similarity) over adjacent class pairs
  double r_dynamic = 1.0;        // exp of the summed risk distances, >= 1
  double r_comprehensive = 0.0;  // r_static * r_dynamic
  double r_normalized = 1.0;     // r_comprehensive / max over criteria, in (0, 1]
};

// Inputs to the dynamic index: one representative test value per supplier
// and the peak of each adjacent-class overlap region.
struct ReliabilityContext {
  std::vector<double> test_points;
  std::vector<double> overlap_peaks;
};

// Overlap-over-union similarity of two classes of the same frame.
// Restricted to adjacent pairs (a class paired with itself yields 1).
double class_similarity(const Frame& frame, int i, int l);

double static_reliability(const Frame& frame);

// Crossing points of adjacent class memberships: the even grid points
// a_2, a_4, ..., one per adjacent pair.
std::vector<double> overlap_peaks(const Frame& frame);

// exp of the summed |test - peak| / (hi - lo) over every (test point,
// overlap peak) pair. Test points must lie within the frame.
double dynamic_reliability(const Frame& frame, const ReliabilityContext& ctx);

// Comprehensive indices per criterion, normalized by the maximum so the
// most reliable criterion gets exactly 1.
std::vector<ReliabilityProfile> reliability_profiles(std::span<const Frame> frames,
                                                     std::span<const ReliabilityContext> ctxs);

// Scales memberships by r_star and renormalizes them to sum to one.
// Throws ComputeError when every membership is zero.
std::vector<double> adjusted_normalized_memberships(std::span<const double> memberships,
                                                    double r_star);

}  // namespace mcda
