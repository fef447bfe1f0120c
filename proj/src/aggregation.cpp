#include "mcda/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcda/errors.hpp"

namespace mcda {

DmWeights dm_weights_svns(std::span<const WeightTerm> importances) {
  if (importances.empty()) throw DataError("no decision makers");
  std::vector<double> scores;
  scores.reserve(importances.size());
  double total = 0.0;
  for (WeightTerm term : importances) {
    Svn v = weight_svn(term);
    double denom = v.truth + v.falsity;
    if (denom == 0.0) {
      throw ComputeError(std::string("degenerate importance term ") +
                         std::string(to_string(term)) + ": truth + falsity is zero");
    }
    double score = v.truth + v.indeterminacy * (v.truth / denom);
    scores.push_back(score);
    total += score;
  }
  if (total <= 0.0) throw ComputeError("decision-maker scores sum to zero");
  for (double& s : scores) s /= total;
  return DmWeights{std::move(scores)};
}

Svn svn_weighted_average(std::span<const Svn> values, std::span<const double> sigma) {
  if (values.empty() || values.size() != sigma.size()) {
    throw DataError("value and weight counts differ");
  }
  double truth_complement = 1.0;
  double indeterminacy = 1.0;
  double falsity = 1.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    truth_complement *= std::pow(1.0 - values[k].truth, sigma[k]);
    indeterminacy *= std::pow(values[k].indeterminacy, sigma[k]);
    falsity *= std::pow(values[k].falsity, sigma[k]);
  }
  return Svn{1.0 - truth_complement, indeterminacy, falsity};
}

std::vector<Svn> criteria_weights_svns(std::span<const std::vector<WeightTerm>> importances,
                                       const DmWeights& dm) {
  std::vector<Svn> weights;
  weights.reserve(importances.size());
  for (std::size_t j = 0; j < importances.size(); ++j) {
    if (importances[j].size() != dm.count()) {
      throw DataError("criterion " + std::to_string(j) + " is missing an importance rating");
    }
    std::vector<Svn> values;
    values.reserve(dm.count());
    for (WeightTerm term : importances[j]) values.push_back(weight_svn(term));
    weights.push_back(svn_weighted_average(values, dm.sigma));
  }
  return weights;
}

Svn aggregate_linguistic_svns(std::span<const PerformanceTerm> ratings, const DmWeights& dm) {
  if (ratings.size() != dm.count()) throw DataError("rating count does not match maker count");
  std::vector<Svn> values;
  values.reserve(ratings.size());
  for (PerformanceTerm term : ratings) values.push_back(performance_svn(term));
  return svn_weighted_average(values, dm.sigma);
}

Ivfs ivfs_weighted_mean(std::span<const Ivfs> dm_weights, std::span<const Ivfs> values) {
  if (dm_weights.empty() || dm_weights.size() != values.size()) {
    throw DataError("weight and value counts differ");
  }
  double t = static_cast<double>(dm_weights.size());
  Ivfs sum{};
  for (std::size_t k = 0; k < values.size(); ++k) {
    Ivfs product = ivfs_combine(dm_weights[k], values[k], IvfsOp::multiply);
    sum.lo += product.lo;
    sum.lo_inner += product.lo_inner;
    sum.peak += product.peak;
    sum.hi_inner += product.hi_inner;
    sum.hi += product.hi;
  }
  return ivfs_scale(sum, 1.0 / t);
}

std::vector<Ivfs> criteria_weights_ivfs(std::span<const std::vector<WeightTerm>> importances,
                                        std::span<const Ivfs> dm_weights) {
  std::vector<Ivfs> weights;
  weights.reserve(importances.size());
  for (std::size_t j = 0; j < importances.size(); ++j) {
    if (importances[j].size() != dm_weights.size()) {
      throw DataError("criterion " + std::to_string(j) + " is missing an importance rating");
    }
    std::vector<Ivfs> values;
    values.reserve(importances[j].size());
    for (WeightTerm term : importances[j]) values.push_back(weight_ivfs(term));
    weights.push_back(ivfs_weighted_mean(dm_weights, values));
  }
  return weights;
}

Ivfs aggregate_linguistic_ivfs(std::span<const PerformanceTerm> ratings,
                               std::span<const Ivfs> dm_weights) {
  if (ratings.size() != dm_weights.size()) {
    throw DataError("rating count does not match maker count");
  }
  std::vector<Ivfs> values;
  values.reserve(ratings.size());
  for (PerformanceTerm term : ratings) values.push_back(performance_ivfs(term));
  return ivfs_weighted_mean(dm_weights, values);
}

Svn integrate_numeric_svns(std::span<const double> class_weights,
                           std::span<const PerformanceTerm> classes) {
  if (class_weights.size() != classes.size()) {
    throw DataError("class weight and label counts differ");
  }
  Svn out{0.0, 0.0, 0.0};
  for (std::size_t l = 0; l < classes.size(); ++l) {
    Svn row = performance_svn(classes[l]);
    out.truth += class_weights[l] * row.truth;
    out.indeterminacy += class_weights[l] * row.indeterminacy;
    out.falsity += class_weights[l] * row.falsity;
  }
  return out;
}

Ivfs integrate_numeric_ivfs(std::span<const double> class_weights,
                            std::span<const PerformanceTerm> classes) {
  if (class_weights.size() != classes.size()) {
    throw DataError("class weight and label counts differ");
  }
  Ivfs out{};
  for (std::size_t l = 0; l < classes.size(); ++l) {
    Ivfs row = performance_ivfs(classes[l]);
    out.lo += class_weights[l] * row.lo;
    out.lo_inner += class_weights[l] * row.lo_inner;
    out.peak += class_weights[l] * row.peak;
    out.hi_inner += class_weights[l] * row.hi_inner;
    out.hi += class_weights[l] * row.hi;
  }
  return out;
}

SvnMatrix weight_matrix_svns(const SvnMatrix& matrix, std::span<const Svn> weights) {
  if (matrix.cols != weights.size()) {
    throw DataError("matrix has " + std::to_string(matrix.cols) + " columns but " +
                    std::to_string(weights.size()) + " weights were given");
  }
  SvnMatrix out(matrix.rows, matrix.cols, MatrixStage::weighted);
  for (std::size_t i = 0; i < matrix.rows; ++i) {
    for (std::size_t j = 0; j < matrix.cols; ++j) {
      out.at(i, j) = svn_product(matrix.at(i, j), weights[j]);
    }
  }
  return out;
}

IvfsMatrix normalize_weight_matrix_ivfs(const IvfsMatrix& matrix, std::span<const Ivfs> weights,
                                        std::span<const Objective> objectives,
                                        std::span<const std::string> column_labels) {
  if (matrix.cols != weights.size() || matrix.cols != objectives.size()) {
    throw DataError("matrix, weight and objective counts differ");
  }
  if (!column_labels.empty() && column_labels.size() != matrix.cols) {
    throw DataError("column label count does not match the matrix");
  }
  if (matrix.rows == 0) throw DataError("empty decision matrix");

  auto column_name = [&](std::size_t j) {
    return column_labels.empty() ? std::to_string(j) : column_labels[j];
  };
  IvfsMatrix out(matrix.rows, matrix.cols, MatrixStage::normalized_weighted);
  for (std::size_t j = 0; j < matrix.cols; ++j) {
    if (objectives[j] == Objective::benefit) {
      double upper = matrix.at(0, j).hi;
      for (std::size_t i = 1; i < matrix.rows; ++i) upper = std::max(upper, matrix.at(i, j).hi);
      if (upper <= 0.0) {
        throw ComputeError("normalization divisor is zero on benefit column " + column_name(j));
      }
      for (std::size_t i = 0; i < matrix.rows; ++i) {
        out.at(i, j) = ivfs_scale(matrix.at(i, j), 1.0 / upper);
      }
    } else {
      double lower = matrix.at(0, j).lo;
      for (std::size_t i = 1; i < matrix.rows; ++i) lower = std::min(lower, matrix.at(i, j).lo);
      if (lower <= 0.0) {
        throw ComputeError("normalization divisor is zero on cost column " + column_name(j));
      }
      for (std::size_t i = 0; i < matrix.rows; ++i) {
        std::array<double, 5> c = matrix.at(i, j).components();
        std::array<double, 5> r;
        for (std::size_t p = 0; p < 5; ++p) r[p] = lower / c[p];
        // Reciprocals reverse the ordering; sort to restore it.
        std::sort(r.begin(), r.end());
        out.at(i, j) = Ivfs::from_components(r);
      }
    }
    for (std::size_t i = 0; i < matrix.rows; ++i) {
      out.at(i, j) = ivfs_combine(out.at(i, j), weights[j], IvfsOp::multiply);
    }
  }
  return out;
}

}  // namespace mcda
