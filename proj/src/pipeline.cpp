#include "mcda/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "mcda/errors.hpp"

namespace mcda {

namespace {

bool verbose_logging() {
  const char* level = std::getenv("MCDA_LOG_LEVEL");
  return level != nullptr && std::string_view(level) == "debug";
}

void log_stage(const char* stage) {
  if (verbose_logging()) std::fprintf(stderr, "mcda: stage %s\n", stage);
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  log_stage(name);
  try {
    return fn();
  } catch (const PipelineError&) {
    throw;
  } catch (const Error& e) {
    throw PipelineError(name, e.what());
  }
}

Svn override_weight_svn(double alpha) { return Svn{alpha, 1.0 - alpha, 1.0 - alpha}; }

Ivfs override_weight_ivfs(double alpha) { return Ivfs{alpha, alpha, alpha, alpha, alpha}; }

}  // namespace

const RankingResult& PipelineResult::ranking(Approach a) const {
  for (const auto& r : rankings) {
    if (r.approach == a) return r;
  }
  throw ComputeError("no ranking was computed for approach " + std::string(to_string(a)));
}

PipelineResult run_pipeline(const DecisionDataset& ds, const RunConfig& config) {
  PipelineResult out;
  std::size_t ns = ds.supplier_count();
  std::size_t nc = ds.criterion_count();

  if (config.weight_override && config.weight_override->criterion_index >= nc) {
    throw DomainError("weight override names a criterion index out of range");
  }
  if (config.weight_override &&
      !(config.weight_override->alpha > 0.0 && config.weight_override->alpha < 1.0)) {
    throw DomainError("weight override alpha must lie strictly inside (0, 1)");
  }

  out.dm_weights = stage("dm-weights", [&] {
    std::vector<WeightTerm> terms;
    terms.reserve(ds.dm_count());
    for (const auto& dm : ds.decision_makers) terms.push_back(dm.importance);
    return dm_weights_svns(terms);
  });
  for (const auto& dm : ds.decision_makers) out.dm_ivfs.push_back(weight_ivfs(dm.importance));

  out.weights = stage("criteria-weights", [&] {
    std::vector<std::vector<WeightTerm>> importances;
    importances.reserve(nc);
    for (const auto& c : ds.criteria) importances.push_back(c.importance);
    CriterionWeightSet set;
    set.svns = criteria_weights_svns(importances, out.dm_weights);
    set.ivfs = criteria_weights_ivfs(importances, out.dm_ivfs);
    if (config.weight_override) {
      std::size_t j = config.weight_override->criterion_index;
      set.svns[j] = override_weight_svn(config.weight_override->alpha);
      set.ivfs[j] = override_weight_ivfs(config.weight_override->alpha);
    }
    set.alpha.reserve(nc);
    for (const auto& w : set.svns) set.alpha.push_back(w.truth);
    return set;
  });

  bool want_svns = false, want_ivfs = false, want_classical = false;
  for (Approach a : config.approaches) {
    want_svns |= a == Approach::svns;
    want_ivfs |= a == Approach::ivfs;
    want_classical |= a == Approach::classical;
  }

  // Fuzzify each numerical criterion and turn every supplier's assessments
  // into a range and per-class memberships. The classical baseline never
  // touches frames, so these stages only run for the fuzzy approaches.
  std::vector<Frame> frames;
  std::vector<ReliabilityContext> contexts;
  std::vector<std::size_t> numeric_indices;
  if (want_svns || want_ivfs) {
    SvnMatrix svns_raw(ns, nc, MatrixStage::raw_aggregated);
    IvfsMatrix ivfs_raw(ns, nc, MatrixStage::raw_aggregated);

    stage("fuzzification", [&] {
      for (std::size_t j = 0; j < nc; ++j) {
        if (ds.criteria[j].kind != CriterionKind::numerical) continue;
        numeric_indices.push_back(j);
        int count = class_count_for_weight(out.weights.alpha[j], config.class_count_rule);
        auto bounds = config.frame_bounds.find(ds.criteria[j].id);
        Frame frame;
        if (bounds != config.frame_bounds.end()) {
          frame = build_frame_over(bounds->second.lo, bounds->second.hi, count);
        } else {
          std::vector<double> values;
          values.reserve(ns * ds.dm_count());
          for (const auto& row : ds.numeric_values[j]) {
            values.insert(values.end(), row.begin(), row.end());
          }
          try {
            frame = build_frame(values, count);
          } catch (const Error& e) {
            throw ComputeError("criterion " + ds.criteria[j].id + ": " + e.what());
          }
        }
        frames.push_back(std::move(frame));
      }
      return 0;
    });

    stage("range-membership", [&] {
      for (std::size_t f = 0; f < numeric_indices.size(); ++f) {
        std::size_t j = numeric_indices[f];
        NumericCriterionArtifacts artifacts;
        artifacts.criterion_index = j;
        artifacts.frame = frames[f];
        for (std::size_t i = 0; i < ns; ++i) {
          std::vector<double> values = ds.numeric_values[j][i];
          // Out-of-frame values can only appear under explicit bounds overrides.
          for (double& v : values) {
            if (v < artifacts.frame.lo || v > artifacts.frame.hi) {
              std::fprintf(stderr,
                           "mcda: warning: clamping %s assessment %g into the configured frame "
                           "of %s\n",
                           ds.suppliers[i].c_str(), v, ds.criteria[j].id.c_str());
              v = std::clamp(v, artifacts.frame.lo, artifacts.frame.hi);
            }
          }
          RangeValue range = crisp_to_range(values);
          artifacts.ranges.push_back(range);
          std::vector<double> m(artifacts.frame.class_count);
          for (int l = 0; l < artifacts.frame.class_count; ++l) {
            m[static_cast<std::size_t>(l)] = range_membership(artifacts.frame, l, range);
          }
          artifacts.memberships.push_back(std::move(m));
        }
        out.numeric.push_back(std::move(artifacts));
      }
      return 0;
    });

    stage("reliability", [&] {
      if (numeric_indices.empty()) return 0;
      for (auto& artifacts : out.numeric) {
        ReliabilityContext ctx;
        ctx.overlap_peaks = overlap_peaks(artifacts.frame);
        for (const auto& range : artifacts.ranges) ctx.test_points.push_back(range.midpoint());
        contexts.push_back(std::move(ctx));
      }
      auto profiles = reliability_profiles(frames, contexts);
      for (std::size_t f = 0; f < out.numeric.size(); ++f) {
        out.numeric[f].profile = profiles[f];
        out.numeric[f].applied_reliability = config.reliability ? profiles[f].r_normalized : 1.0;
      }
      return 0;
    });

    stage("numeric-integration", [&] {
      for (auto& artifacts : out.numeric) {
        std::size_t j = artifacts.criterion_index;
        for (std::size_t i = 0; i < ns; ++i) {
          std::vector<double> weights;
          try {
            weights = adjusted_normalized_memberships(artifacts.memberships[i],
                                                      artifacts.applied_reliability);
          } catch (const Error& e) {
            throw ComputeError("supplier " + ds.suppliers[i] + " on criterion " +
                               ds.criteria[j].id + ": " + e.what());
          }
          // The normalized class weights sum to one; the reliability factor
          // is applied to the integrated number, which is equivalent to
          // discounting the weights after normalization.
          Svn svn_cell = integrate_numeric_svns(weights, artifacts.frame.classes);
          Ivfs ivfs_cell = integrate_numeric_ivfs(weights, artifacts.frame.classes);
          double r = artifacts.applied_reliability;
          svns_raw.at(i, j) = Svn{r * svn_cell.truth, r * svn_cell.indeterminacy,
                                  r * svn_cell.falsity};
          ivfs_raw.at(i, j) = ivfs_scale(ivfs_cell, r);
          artifacts.class_weights.push_back(std::move(weights));
        }
      }
      return 0;
    });

    stage("linguistic-aggregation", [&] {
      for (std::size_t j = 0; j < nc; ++j) {
        if (ds.criteria[j].kind != CriterionKind::linguistic) continue;
        for (std::size_t i = 0; i < ns; ++i) {
          const auto& ratings = ds.linguistic_values[j][i];
          svns_raw.at(i, j) = aggregate_linguistic_svns(ratings, out.dm_weights);
          ivfs_raw.at(i, j) = aggregate_linguistic_ivfs(ratings, out.dm_ivfs);
        }
      }
      return 0;
    });

    std::vector<Objective> objectives;
    objectives.reserve(nc);
    for (const auto& c : ds.criteria) objectives.push_back(c.objective);

    if (want_svns) {
      out.svns_raw = svns_raw;
      out.svns_weighted = stage("weighting", [&] {
        return weight_matrix_svns(svns_raw, out.weights.svns);
      });
      stage("ideal-solutions", [&] {
        auto [pis, nis] = ideal_solutions_svns(*out.svns_weighted, objectives);
        out.svns_pis = std::move(pis);
        out.svns_nis = std::move(nis);
        return 0;
      });
      out.rankings.push_back(stage("ranking", [&] {
        return rank_svns(*out.svns_weighted, out.svns_pis, out.svns_nis, ds.suppliers);
      }));
    }
    if (want_ivfs) {
      out.ivfs_raw = ivfs_raw;
      out.ivfs_normalized_weighted = stage("normalization", [&] {
        std::vector<std::string> labels;
        labels.reserve(nc);
        for (const auto& c : ds.criteria) labels.push_back(c.id);
        return normalize_weight_matrix_ivfs(ivfs_raw, out.weights.ivfs, objectives, labels);
      });
      out.rankings.push_back(stage("ranking", [&] {
        return rank_ivfs(*out.ivfs_normalized_weighted, ds.suppliers);
      }));
    }
  }

  if (want_classical) {
    out.rankings.push_back(stage("ranking", [&] { return rank_classical(ds); }));
  }

  return out;
}

}  // namespace mcda
