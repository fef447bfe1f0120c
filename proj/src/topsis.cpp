#include "mcda/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mcda/errors.hpp"

namespace mcda {

const SupplierScore& RankingResult::best() const {
  if (scores.empty()) throw ComputeError("empty ranking");
  for (const auto& s : scores) {
    if (s.rank == 1) return s;
  }
  throw ComputeError("ranking has no rank-1 row");
}

void assign_ranks(RankingResult& result) {
  std::vector<std::size_t> order(result.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.scores[a].cc > result.scores[b].cc;
  });
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    result.scores[order[pos]].rank = static_cast<int>(pos + 1);
  }
  for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
    if (result.scores[order[pos]].cc == result.scores[order[pos + 1]].cc) {
      result.scores[order[pos]].tied = true;
      result.scores[order[pos + 1]].tied = true;
    }
  }
}

std::pair<std::vector<Svn>, std::vector<Svn>> ideal_solutions_svns(
    const SvnMatrix& weighted, std::span<const Objective> objectives) {
  if (weighted.rows == 0 || weighted.cols == 0) throw DataError("empty decision matrix");
  if (weighted.cols != objectives.size()) {
    throw DataError("matrix and objective counts differ");
  }
  std::vector<Svn> pis(weighted.cols), nis(weighted.cols);
  for (std::size_t j = 0; j < weighted.cols; ++j) {
    double a_min = weighted.at(0, j).truth, a_max = a_min;
    double b_min = weighted.at(0, j).indeterminacy, b_max = b_min;
    double c_min = weighted.at(0, j).falsity, c_max = c_min;
    for (std::size_t i = 1; i < weighted.rows; ++i) {
      const Svn& cell = weighted.at(i, j);
      a_min = std::min(a_min, cell.truth);
      a_max = std::max(a_max, cell.truth);
      b_min = std::min(b_min, cell.indeterminacy);
      b_max = std::max(b_max, cell.indeterminacy);
      c_min = std::min(c_min, cell.falsity);
      c_max = std::max(c_max, cell.falsity);
    }
    if (objectives[j] == Objective::benefit) {
      pis[j] = Svn{a_max, b_min, c_min};
      nis[j] = Svn{a_min, b_max, c_max};
    } else {
      pis[j] = Svn{a_min, b_max, c_max};
      nis[j] = Svn{a_max, b_min, c_min};
    }
  }
  return {std::move(pis), std::move(nis)};
}

RankingResult rank_svns(const SvnMatrix& weighted, std::span<const Svn> pis,
                        std::span<const Svn> nis, std::span<const std::string> suppliers) {
  if (weighted.rows != suppliers.size()) throw DataError("supplier count mismatch");
  if (weighted.cols != pis.size() || weighted.cols != nis.size()) {
    throw DataError("ideal solutions do not match the matrix");
  }
  auto distance = [&](std::size_t i, std::span<const Svn> ref) {
    double sum = 0.0;
    for (std::size_t j = 0; j < weighted.cols; ++j) {
      const Svn& cell = weighted.at(i, j);
      double da = cell.truth - ref[j].truth;
      double db = cell.indeterminacy - ref[j].indeterminacy;
      double dc = cell.falsity - ref[j].falsity;
      sum += da * da + db * db + dc * dc;
    }
    return std::sqrt(sum);
  };

  RankingResult result;
  result.approach = Approach::svns;
  result.scores.resize(weighted.rows);
  for (std::size_t i = 0; i < weighted.rows; ++i) {
    SupplierScore& score = result.scores[i];
    score.supplier = suppliers[i];
    score.d_plus = distance(i, pis);
    score.d_minus = distance(i, nis);
    double total = score.d_plus + score.d_minus;
    if (total == 0.0) {
      throw ComputeError("degenerate ranking: supplier " + suppliers[i] +
                         " is at zero distance from both ideals");
    }
    score.cc = score.d_minus / total;
  }
  assign_ranks(result);
  return result;
}

RankingResult rank_ivfs(const IvfsMatrix& normalized_weighted,
                        std::span<const std::string> suppliers) {
  if (normalized_weighted.rows != suppliers.size()) throw DataError("supplier count mismatch");
  for (const Ivfs& cell : normalized_weighted.cells) {
    for (double v : cell.components()) {
      if (v < 0.0 || v > 1.0) {
        throw DomainError("cell component " + std::to_string(v) +
                          " outside [0, 1]; matrix was not normalized");
      }
    }
  }

  RankingResult result;
  result.approach = Approach::ivfs;
  result.scores.resize(normalized_weighted.rows);
  auto leg = [](double a, double b, double c, double ref) {
    double da = a - ref, db = b - ref, dc = c - ref;
    return std::sqrt((da * da + db * db + dc * dc) / 3.0);
  };
  for (std::size_t i = 0; i < normalized_weighted.rows; ++i) {
    SupplierScore& score = result.scores[i];
    score.supplier = suppliers[i];
    for (std::size_t j = 0; j < normalized_weighted.cols; ++j) {
      const Ivfs& cell = normalized_weighted.at(i, j);
      score.d1_plus += leg(cell.lo, cell.peak, cell.hi_inner, 1.0);
      score.d2_plus += leg(cell.lo_inner, cell.peak, cell.hi, 1.0);
      score.d1_minus += leg(cell.lo, cell.peak, cell.hi_inner, 0.0);
      score.d2_minus += leg(cell.lo_inner, cell.peak, cell.hi, 0.0);
    }
    double total1 = score.d1_plus + score.d1_minus;
    double total2 = score.d2_plus + score.d2_minus;
    if (total1 == 0.0 || total2 == 0.0) {
      throw ComputeError("degenerate ranking: supplier " + suppliers[i] +
                         " is at zero distance from both ideals");
    }
    score.rc1 = score.d2_minus / total2;
    score.rc2 = score.d1_minus / total1;
    score.cc = 0.5 * (score.rc1 + score.rc2);
  }
  assign_ranks(result);
  return result;
}

ClassicalModel classical_model(const DecisionDataset& ds) {
  ClassicalModel model;
  model.suppliers = ds.suppliers;
  std::size_t ns = ds.supplier_count();
  std::size_t nd = ds.dm_count();
  model.matrix.assign(ns, std::vector<double>(ds.criterion_count(), 0.0));
  for (std::size_t j = 0; j < ds.criterion_count(); ++j) {
    const auto& c = ds.criteria[j];
    model.criteria.push_back(c.id);
    model.objectives.push_back(c.objective);
    for (std::size_t i = 0; i < ns; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < nd; ++k) {
        if (c.kind == CriterionKind::numerical) {
          sum += ds.numeric_values[j][i][k];
        } else {
          // Ladder positions 1..9, worst to best.
          sum += static_cast<double>(ds.linguistic_values[j][i][k]) + 1.0;
        }
      }
      model.matrix[i][j] = sum / static_cast<double>(nd);
    }
  }

  // Entropy weights over the column shares.
  std::size_t nc = ds.criterion_count();
  model.entropy_weights.assign(nc, 0.0);
  double k_factor = ns > 1 ? 1.0 / std::log(static_cast<double>(ns)) : 1.0;
  double divergence_total = 0.0;
  for (std::size_t j = 0; j < nc; ++j) {
    double column_sum = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      if (model.matrix[i][j] < 0.0) {
        throw ComputeError("classical baseline requires nonnegative values on criterion " +
                           model.criteria[j]);
      }
      column_sum += model.matrix[i][j];
    }
    if (column_sum <= 0.0) {
      throw ComputeError("classical baseline: column " + model.criteria[j] + " sums to zero");
    }
    double entropy = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      double p = model.matrix[i][j] / column_sum;
      if (p > 0.0) entropy -= p * std::log(p);
    }
    entropy *= k_factor;
    model.entropy_weights[j] = 1.0 - entropy;
    divergence_total += model.entropy_weights[j];
  }
  if (divergence_total <= 0.0) {
    throw ComputeError("degenerate ranking: all suppliers look identical to the entropy weights");
  }
  for (double& w : model.entropy_weights) w /= divergence_total;
  return model;
}

RankingResult rank_classical_with_weights(const ClassicalModel& model,
                                          std::span<const double> weights) {
  std::size_t ns = model.suppliers.size();
  std::size_t nc = model.criteria.size();
  if (weights.size() != nc) throw DataError("weight count does not match criteria");

  double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (weight_sum <= 0.0) throw ComputeError("criterion weights sum to zero");

  // Vector normalization, then weighting.
  std::vector<std::vector<double>> v(ns, std::vector<double>(nc, 0.0));
  for (std::size_t j = 0; j < nc; ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < ns; ++i) norm += model.matrix[i][j] * model.matrix[i][j];
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      throw ComputeError("classical baseline: column " + model.criteria[j] + " is all zero");
    }
    for (std::size_t i = 0; i < ns; ++i) {
      v[i][j] = (weights[j] / weight_sum) * (model.matrix[i][j] / norm);
    }
  }

  std::vector<double> pis(nc), nis(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    double col_min = v[0][j], col_max = v[0][j];
    for (std::size_t i = 1; i < ns; ++i) {
      col_min = std::min(col_min, v[i][j]);
      col_max = std::max(col_max, v[i][j]);
    }
    if (model.objectives[j] == Objective::benefit) {
      pis[j] = col_max;
      nis[j] = col_min;
    } else {
      pis[j] = col_min;
      nis[j] = col_max;
    }
  }

  RankingResult result;
  result.approach = Approach::classical;
  result.scores.resize(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    SupplierScore& score = result.scores[i];
    score.supplier = model.suppliers[i];
    double plus = 0.0, minus = 0.0;
    for (std::size_t j = 0; j < nc; ++j) {
      plus += (v[i][j] - pis[j]) * (v[i][j] - pis[j]);
      minus += (v[i][j] - nis[j]) * (v[i][j] - nis[j]);
    }
    score.d_plus = std::sqrt(plus);
    score.d_minus = std::sqrt(minus);
    double total = score.d_plus + score.d_minus;
    if (total == 0.0) {
      throw ComputeError("degenerate ranking: supplier " + model.suppliers[i] +
                         " is at zero distance from both ideals");
    }
    score.cc = score.d_minus / total;
  }
  assign_ranks(result);
  return result;
}

RankingResult rank_classical(const DecisionDataset& ds) {
  ClassicalModel model = classical_model(ds);
  return rank_classical_with_weights(model, model.entropy_weights);
}

}  // namespace mcda
