#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcda/aggregation.hpp"
#include "mcda/dataset.hpp"

namespace mcda {

// One output row: the distance fields that apply depend on the approach.
struct SupplierScore {
  std::string supplier;
  double d_plus = 0.0;
  double d_minus = 0.0;
  double d1_plus = 0.0;
  double d2_plus = 0.0;
  double d1_minus = 0.0;
  double d2_minus = 0.0;
  double rc1 = 0.0;
  double rc2 = 0.0;
  double cc = 0.0;
  int rank = 0;
  bool tied = false;
};

struct RankingResult {
  Approach approach = Approach::svns;
  std::vector<SupplierScore> scores;  // dataset supplier order

  const SupplierScore& best() const;
};

// Per-criterion componentwise extrema. Benefit columns take the largest
// truth with the smallest indeterminacy and falsity for the positive ideal;
// cost columns swap the roles.
std::pair<std::vector<Svn>, std::vector<Svn>> ideal_solutions_svns(
    const SvnMatrix& weighted, std::span<const Objective> objectives);

RankingResult rank_svns(const SvnMatrix& weighted, std::span<const Svn> pis,
                        std::span<const Svn> nis, std::span<const std::string> suppliers);

// Distances against the fixed unit and zero ideals using the outer and inner
// component triples.
RankingResult rank_ivfs(const IvfsMatrix& normalized_weighted,
                        std::span<const std::string> suppliers);

// Crisp baseline: linguistic terms mapped to 1..9, cells averaged over
// makers, entropy criterion weights, vector-normalized TOPSIS.
struct ClassicalModel {
  std::vector<std::string> suppliers;
  std::vector<std::string> criteria;
  std::vector<Objective> objectives;
  std::vector<std::vector<double>> matrix;  // supplier x criterion means
  std::vector<double> entropy_weights;      // sums to 1
};

ClassicalModel classical_model(const DecisionDataset& ds);
RankingResult rank_classical_with_weights(const ClassicalModel& model,
                                          std::span<const double> weights);
RankingResult rank_classical(const DecisionDataset& ds);

// Ranks from closeness coefficients: descending cc, stable in input order,
// exact ties flagged.
void assign_ranks(RankingResult& result);

}  // namespace mcda
