#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mcda/fuzzy.hpp"
#include "mcda/matrix.hpp"

namespace mcda {

struct DecisionMakerSpec {
  std::string id;
  WeightTerm importance = WeightTerm::M;
};

struct CriterionSpec {
  std::string id;
  std::string name;
  CriterionKind kind = CriterionKind::numerical;
  Objective objective = Objective::benefit;
  std::vector<WeightTerm> importance;  // per decision maker, dataset order
};

// Complete assessment tensor: every (supplier, criterion, maker) cell is
// present, crisp for numerical criteria and a performance term otherwise.
struct DecisionDataset {
  std::vector<DecisionMakerSpec> decision_makers;
  std::vector<CriterionSpec> criteria;
  std::vector<std::string> suppliers;

  // [criterion][supplier][maker]; only the slot matching the criterion kind
  // is populated.
  std::vector<std::vector<std::vector<double>>> numeric_values;
  std::vector<std::vector<std::vector<PerformanceTerm>>> linguistic_values;

  std::size_t dm_count() const { return decision_makers.size(); }
  std::size_t criterion_count() const { return criteria.size(); }
  std::size_t supplier_count() const { return suppliers.size(); }

  std::size_t criterion_index(std::string_view id) const;  // DataError when unknown

  // Enforces every structural invariant; load and generate both call this.
  void validate() const;
};

DecisionDataset load_dataset(const std::filesystem::path& path);
DecisionDataset parse_dataset(const std::string& json_text,
                              const std::filesystem::path& base_dir = {});

// Canonical serialization; parse(serialize(ds)) == ds.
std::string serialize_dataset(const DecisionDataset& ds);
void save_dataset(const DecisionDataset& ds, const std::filesystem::path& path);

// One criterion of the generator catalogue; the value range only applies to
// numerical criteria.
struct GenCriterion {
  std::string id;
  std::string name;
  CriterionKind kind = CriterionKind::numerical;
  Objective objective = Objective::benefit;
  double range_lo = 0.0;
  double range_hi = 1.0;
};

// Supplier-evaluation catalogue used when no criteria spec is given:
// three numerical and five linguistic criteria with mixed objectives.
std::vector<GenCriterion> default_criteria_catalogue();

std::vector<GenCriterion> load_criteria_catalogue(const std::filesystem::path& path);

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t suppliers = 8;
  std::size_t decision_makers = 10;
  std::vector<GenCriterion> criteria;  // empty -> default catalogue
};

// Reproducible pseudo-random dataset; the same options produce byte-identical
// serializations on every platform.
DecisionDataset generate_dataset(const GenOptions& options);

}  // namespace mcda
