#include "mcda/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcda/errors.hpp"

namespace mcda {

double class_similarity(const Frame& frame, int i, int l) {
  if (i < 0 || i >= frame.class_count || l < 0 || l >= frame.class_count) {
    throw DomainError("class index out of range");
  }
  if (std::abs(i - l) > 1) {
    throw DomainError("similarity is defined for adjacent classes only");
  }
  return jaccard_similarity(frame.class_function(i), frame.class_function(l));
}

double static_reliability(const Frame& frame) {
  if (frame.class_count < 2) throw DomainError("frame needs at least two classes");
  double total = 0.0;
  for (int k = 0; k + 1 < frame.class_count; ++k) {
    total += 1.0 - class_similarity(frame, k, k + 1);
  }
  return total;
}

std::vector<double> overlap_peaks(const Frame& frame) {
  std::vector<double> peaks;
  peaks.reserve(static_cast<std::size_t>(frame.class_count) - 1);
  for (int k = 0; k + 1 < frame.class_count; ++k) {
    peaks.push_back(frame.point(2 * k + 2));
  }
  return peaks;
}

namespace {

double summed_risk_distance(const Frame& frame, const ReliabilityContext& ctx) {
  double span = frame.hi - frame.lo;
  double total = 0.0;
  for (double t : ctx.test_points) {
    if (t < frame.lo || t > frame.hi) {
      throw DomainError("test point " + std::to_string(t) + " outside the frame");
    }
    for (double p : ctx.overlap_peaks) {
      total += std::abs(t - p) / span;
    }
  }
  return total;
}

}  // namespace

double dynamic_reliability(const Frame& frame, const ReliabilityContext& ctx) {
  return std::exp(summed_risk_distance(frame, ctx));
}

std::vector<ReliabilityProfile> reliability_profiles(std::span<const Frame> frames,
                                                     std::span<const ReliabilityContext> ctxs) {
  if (frames.empty()) throw DataError("no numerical criteria to profile");
  if (frames.size() != ctxs.size()) {
    throw DataError("frame and context counts differ");
  }

  std::vector<ReliabilityProfile> profiles(frames.size());
  // Work with log(R) so the cross-criteria normalization stays finite even
  // when the exponentials overflow.
  std::vector<double> log_r(frames.size());
  for (std::size_t j = 0; j < frames.size(); ++j) {
    double r_static = static_reliability(frames[j]);
    double risk = summed_risk_distance(frames[j], ctxs[j]);
    profiles[j].r_static = r_static;
    profiles[j].r_dynamic = std::exp(risk);
    profiles[j].r_comprehensive = r_static * profiles[j].r_dynamic;
    log_r[j] = std::log(r_static) + risk;
  }
  double log_max = *std::max_element(log_r.begin(), log_r.end());
  for (std::size_t j = 0; j < frames.size(); ++j) {
    profiles[j].r_normalized = std::exp(log_r[j] - log_max);
  }
  return profiles;
}

std::vector<double> adjusted_normalized_memberships(std::span<const double> memberships,
                                                    double r_star) {
  if (memberships.empty()) throw DataError("empty membership vector");
  if (!(r_star > 0.0)) throw DomainError("reliability factor must be positive");
  std::vector<double> adjusted(memberships.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < memberships.size(); ++i) {
    adjusted[i] = r_star * memberships[i];
    sum += adjusted[i];
  }
  if (sum <= 0.0) {
    throw ComputeError("membership vector has no support");
  }
  for (double& a : adjusted) a /= sum;
  return adjusted;
}

}  // namespace mcda
