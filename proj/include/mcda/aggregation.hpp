#pragma once

#include <span>
#include <string>
#include <vector>

#include "mcda/fuzzy.hpp"
#include "mcda/matrix.hpp"

namespace mcda {

// Normalized decision-maker weights, sigma_k >= 0 and sum = 1.
struct DmWeights {
  std::vector<double> sigma;

  std::size_t count() const { return sigma.size(); }
};

// Per-criterion weights in both schemes plus the representative scalar
// weight (the truth component of the SVNS weight).
struct CriterionWeightSet {
  std::vector<Svn> svns;
  std::vector<Ivfs> ivfs;
  std::vector<double> alpha;
};

using SvnMatrix = DecisionMatrix<Svn>;
using IvfsMatrix = DecisionMatrix<Ivfs>;

// Decision-maker weights from their importance terms: each maker scores
// truth + indeterminacy * truth / (truth + falsity), normalized over makers.
DmWeights dm_weights_svns(std::span<const WeightTerm> importances);

// Weighted aggregation of SVN values with exponents sigma:
// (1 - prod (1-a)^sigma, prod b^sigma, prod c^sigma).
Svn svn_weighted_average(std::span<const Svn> values, std::span<const double> sigma);

// Per-criterion SVNS weights from per-maker importance terms.
// importances[j][k] is criterion j as rated by maker k.
std::vector<Svn> criteria_weights_svns(std::span<const std::vector<WeightTerm>> importances,
                                       const DmWeights& dm);

Svn aggregate_linguistic_svns(std::span<const PerformanceTerm> ratings, const DmWeights& dm);

// Mean of the per-maker products weight_k * value_k with inner/outer pairing.
Ivfs ivfs_weighted_mean(std::span<const Ivfs> dm_weights, std::span<const Ivfs> values);

std::vector<Ivfs> criteria_weights_ivfs(std::span<const std::vector<WeightTerm>> importances,
                                        std::span<const Ivfs> dm_weights);

Ivfs aggregate_linguistic_ivfs(std::span<const PerformanceTerm> ratings,
                               std::span<const Ivfs> dm_weights);

// Convex combination of the tabulated rows of the given classes with the
// normalized class weights.
Svn integrate_numeric_svns(std::span<const double> class_weights,
                           std::span<const PerformanceTerm> classes);
Ivfs integrate_numeric_ivfs(std::span<const double> class_weights,
                            std::span<const PerformanceTerm> classes);

// Cellwise product of the aggregated matrix with the criterion weights.
SvnMatrix weight_matrix_svns(const SvnMatrix& matrix, std::span<const Svn> weights);

// Benefit columns divide by the column maximum of the upper support; cost
// columns take the reciprocal form against the column minimum of the lower
// support (components re-sorted to keep the ordering invariant). Each
// normalized cell is then multiplied by the criterion weight. Zero-divisor
// errors name the criterion via column_labels when given, else the index.
IvfsMatrix normalize_weight_matrix_ivfs(const IvfsMatrix& matrix, std::span<const Ivfs> weights,
                                        std::span<const Objective> objectives,
                                        std::span<const std::string> column_labels = {});

}  // namespace mcda
