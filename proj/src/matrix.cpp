#include "mcda/matrix.hpp"

#include <string>

namespace mcda {

std::string_view to_string(Objective o) { return o == Objective::benefit ? "benefit" : "cost"; }

std::string_view to_string(CriterionKind k) {
  return k == CriterionKind::numerical ? "numerical" : "linguistic";
}

std::string_view to_string(Approach a) {
  switch (a) {
    case Approach::svns:
      return "svns";
    case Approach::ivfs:
      return "ivfs";
    case Approach::classical:
      return "classical";
  }
  return "unknown";
}

Objective parse_objective(std::string_view s) {
  if (s == "benefit" || s == "max") return Objective::benefit;
  if (s == "cost" || s == "min") return Objective::cost;
  throw DataError("unknown objective '" + std::string(s) + "' (expected benefit/max or cost/min)");
}

CriterionKind parse_criterion_kind(std::string_view s) {
  if (s == "numerical") return CriterionKind::numerical;
  if (s == "linguistic") return CriterionKind::linguistic;
  throw DataError("unknown criterion kind '" + std::string(s) + "'");
}

}  // namespace mcda
