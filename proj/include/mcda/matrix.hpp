#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mcda/errors.hpp"

namespace mcda {

enum class Objective { benefit, cost };
enum class CriterionKind { numerical, linguistic };
enum class Approach { svns, ivfs, classical };

std::string_view to_string(Objective o);
std::string_view to_string(CriterionKind k);
std::string_view to_string(Approach a);
Objective parse_objective(std::string_view s);
CriterionKind parse_criterion_kind(std::string_view s);

enum class MatrixStage { raw_aggregated, weighted, normalized_weighted };

// Rectangular supplier-by-criterion matrix of fuzzy cells.
template <typename Cell>
struct DecisionMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  MatrixStage stage = MatrixStage::raw_aggregated;
  std::vector<Cell> cells;  // row-major

  DecisionMatrix() = default;
  DecisionMatrix(std::size_t r, std::size_t c, MatrixStage s)
      : rows(r), cols(c), stage(s), cells(r * c) {}

  Cell& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
  const Cell& at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
};

}  // namespace mcda
