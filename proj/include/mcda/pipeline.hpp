#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mcda/dataset.hpp"
#include "mcda/reliability.hpp"
#include "mcda/topsis.hpp"

namespace mcda {

// Replaces one criterion's weight with a synthetic weight of representative
// value alpha before the pipeline runs (used by sensitivity sweeps).
struct WeightOverride {
  std::size_t criterion_index = 0;
  double alpha = 0.5;
};

struct RunConfig {
  std::vector<Approach> approaches{Approach::svns, Approach::ivfs};
  bool reliability = true;
  ClassCountRule class_count_rule{};
  std::optional<WeightOverride> weight_override;
  // Optional explicit universe of discourse per criterion id. Assessments
  // outside it are clamped with a warning on stderr.
  std::map<std::string, RangeValue> frame_bounds;
};

// Intermediates kept for one numerical criterion.
struct NumericCriterionArtifacts {
  std::size_t criterion_index = 0;
  Frame frame;
  std::vector<RangeValue> ranges;                   // per supplier
  std::vector<std::vector<double>> memberships;     // supplier x class
  std::vector<std::vector<double>> class_weights;   // normalized, sums to 1
  ReliabilityProfile profile;
  double applied_reliability = 1.0;                 // 1 when reliability is off
};

struct PipelineResult {
  DmWeights dm_weights;
  std::vector<Ivfs> dm_ivfs;
  CriterionWeightSet weights;
  std::vector<NumericCriterionArtifacts> numeric;

  std::optional<SvnMatrix> svns_raw;
  std::optional<SvnMatrix> svns_weighted;
  std::vector<Svn> svns_pis, svns_nis;
  std::optional<IvfsMatrix> ivfs_raw;
  std::optional<IvfsMatrix> ivfs_normalized_weighted;

  std::vector<RankingResult> rankings;

  const RankingResult& ranking(Approach a) const;
};

// Runs the whole chain: weights, fuzzification, range memberships,
// reliability, integration, linguistic aggregation, matrix assembly,
// weighting/normalization, ideals, ranking. Errors from inner stages are
// rethrown as PipelineError with the stage attached.
PipelineResult run_pipeline(const DecisionDataset& ds, const RunConfig& config);

}  // namespace mcda
