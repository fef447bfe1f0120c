#pragma once

#include <span>
#include <string>
#include <vector>

#include "mcda/pipeline.hpp"

namespace mcda {

// The optimum changed between two adjacent grid points.
struct Crossover {
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  std::string outgoing;
  std::string incoming;
};

struct SweepResult {
  std::string criterion;
  Approach approach = Approach::svns;
  std::vector<double> grid;
  std::vector<std::string> suppliers;
  std::vector<std::vector<double>> cc;  // [grid point][supplier]
  std::vector<Crossover> crossovers;
};

// {0.1, 0.2, ..., 0.9}
std::vector<double> default_alpha_grid();

// Re-runs the pipeline with the chosen criterion's weight overridden to each
// alpha in turn; the other criteria keep their computed weights. With
// parallel = true the grid points are evaluated concurrently and merged in
// grid order.
SweepResult sweep_weight(const DecisionDataset& ds, const RunConfig& config,
                         std::size_t criterion_index, std::span<const double> grid,
                         Approach approach, bool parallel = false);

// Classical baseline sweep: the criterion's entropy weight is multiplied by
// alpha and the weight vector renormalized.
SweepResult sweep_classical(const DecisionDataset& ds, std::size_t criterion_index,
                            std::span<const double> grid);

// P when the supplier's closeness coefficient grows from the bottom of the
// grid to the top (beyond a 1e-9 dead band), N otherwise; flat marks
// differences inside the dead band.
struct AssociationTable {
  std::vector<std::string> suppliers;
  std::vector<std::string> criteria;
  std::vector<std::vector<bool>> positive;  // [supplier][criterion]
  std::vector<std::vector<bool>> flat;
};

AssociationTable association_table(const DecisionDataset& ds, const RunConfig& config,
                                   std::span<const double> grid, Approach approach,
                                   bool parallel = false);

}  // namespace mcda
