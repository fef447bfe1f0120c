#include "mcda/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "mcda/errors.hpp"

namespace mcda {

namespace {

constexpr double kFlatBand = 1e-9;

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("empty sweep grid");
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (!(grid[g] > 0.0 && grid[g] < 1.0)) {
      throw DomainError("grid value " + std::to_string(grid[g]) +
                        " outside the open interval (0, 1)");
    }
    if (g > 0 && !(grid[g] > grid[g - 1])) {
      throw DomainError("sweep grid must be strictly increasing");
    }
  }
}

std::size_t best_index(const std::vector<double>& cc) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cc.size(); ++i) {
    if (cc[i] > cc[best]) best = i;
  }
  return best;
}

void detect_crossovers(SweepResult& result) {
  for (std::size_t g = 0; g + 1 < result.grid.size(); ++g) {
    std::size_t from = best_index(result.cc[g]);
    std::size_t to = best_index(result.cc[g + 1]);
    if (from != to) {
      result.crossovers.push_back(Crossover{result.grid[g], result.grid[g + 1],
                                            result.suppliers[from], result.suppliers[to]});
    }
  }
}

std::vector<double> cc_in_supplier_order(const RankingResult& ranking) {
  std::vector<double> cc;
  cc.reserve(ranking.scores.size());
  for (const auto& score : ranking.scores) cc.push_back(score.cc);
  return cc;
}

}  // namespace

std::vector<double> default_alpha_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

SweepResult sweep_weight(const DecisionDataset& ds, const RunConfig& config,
                         std::size_t criterion_index, std::span<const double> grid,
                         Approach approach, bool parallel) {
  if (criterion_index >= ds.criterion_count()) {
    throw DomainError("sweep criterion index out of range");
  }
  if (approach == Approach::classical) {
    return sweep_classical(ds, criterion_index, grid);
  }
  validate_grid(grid);

  SweepResult result;
  result.criterion = ds.criteria[criterion_index].id;
  result.approach = approach;
  result.grid.assign(grid.begin(), grid.end());
  result.suppliers = ds.suppliers;
  result.cc.resize(grid.size());

  auto run_point = [&](double alpha) {
    RunConfig point_config = config;
    point_config.approaches = {approach};
    point_config.weight_override = WeightOverride{criterion_index, alpha};
    return cc_in_supplier_order(run_pipeline(ds, point_config).ranking(approach));
  };

  if (parallel) {
    std::vector<std::future<std::vector<double>>> futures;
    futures.reserve(grid.size());
    for (double alpha : grid) {
      futures.push_back(std::async(std::launch::async, run_point, alpha));
    }
    for (std::size_t g = 0; g < grid.size(); ++g) result.cc[g] = futures[g].get();
  } else {
    for (std::size_t g = 0; g < grid.size(); ++g) result.cc[g] = run_point(grid[g]);
  }

  detect_crossovers(result);
  return result;
}

SweepResult sweep_classical(const DecisionDataset& ds, std::size_t criterion_index,
                            std::span<const double> grid) {
  if (criterion_index >= ds.criterion_count()) {
    throw DomainError("sweep criterion index out of range");
  }
  validate_grid(grid);

  ClassicalModel model = classical_model(ds);
  SweepResult result;
  result.criterion = ds.criteria[criterion_index].id;
  result.approach = Approach::classical;
  result.grid.assign(grid.begin(), grid.end());
  result.suppliers = ds.suppliers;
  result.cc.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> weights = model.entropy_weights;
    weights[criterion_index] *= grid[g];
    result.cc[g] = cc_in_supplier_order(rank_classical_with_weights(model, weights));
  }
  detect_crossovers(result);
  return result;
}

AssociationTable association_table(const DecisionDataset& ds, const RunConfig& config,
                                   std::span<const double> grid, Approach approach,
                                   bool parallel) {
  validate_grid(grid);
  AssociationTable table;
  table.suppliers = ds.suppliers;
  std::size_t ns = ds.supplier_count();
  table.positive.assign(ns, std::vector<bool>(ds.criterion_count(), false));
  table.flat.assign(ns, std::vector<bool>(ds.criterion_count(), false));
  for (std::size_t j = 0; j < ds.criterion_count(); ++j) {
    table.criteria.push_back(ds.criteria[j].id);
    SweepResult sweep = sweep_weight(ds, config, j, grid, approach, parallel);
    const auto& cc_lo = sweep.cc.front();
    const auto& cc_hi = sweep.cc.back();
    for (std::size_t i = 0; i < ns; ++i) {
      double delta = cc_hi[i] - cc_lo[i];
      table.positive[i][j] = delta > kFlatBand;
      table.flat[i][j] = std::abs(delta) <= kFlatBand;
    }
  }
  return table;
}

}  // namespace mcda
