#include "mcda/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mcda/errors.hpp"

namespace mcda {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_name(const std::string& supplier, const std::string& criterion,
                      const std::string& dm) {
  return "(" + supplier + ", " + criterion + ", " + dm + ")";
}

// Deterministic 64-bit generator, stable across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RawAssessment {
  std::string supplier;
  std::string criterion;
  std::string dm;
  bool is_number = false;
  double number = 0.0;
  std::string text;
};

std::vector<RawAssessment> parse_assessments_csv(const std::string& text) {
  std::vector<RawAssessment> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (line_no == 1 && !fields.empty() && fields[0] == "supplier") continue;  // header
    if (fields.size() != 4) {
      throw DataError("assessments CSV line " + std::to_string(line_no) +
                      ": expected supplier,criterion,dm,value");
    }
    RawAssessment a;
    a.supplier = fields[0];
    a.criterion = fields[1];
    a.dm = fields[2];
    a.text = fields[3];
    char* end = nullptr;
    double v = std::strtod(fields[3].c_str(), &end);
    if (end && *end == '\0' && end != fields[3].c_str()) {
      a.is_number = true;
      a.number = v;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

std::size_t DecisionDataset::criterion_index(std::string_view id) const {
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (criteria[j].id == id) return j;
  }
  throw DataError("unknown criterion '" + std::string(id) + "'");
}

void DecisionDataset::validate() const {
  if (decision_makers.empty()) throw DataError("dataset has no decision makers");
  if (criteria.empty()) throw DataError("dataset has no criteria");
  if (suppliers.empty()) throw DataError("dataset has no suppliers");

  auto check_unique = [](const std::vector<std::string>& ids, const char* what) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (id.empty()) throw DataError(std::string("empty ") + what + " id");
      if (!seen.insert(id).second) {
        throw DataError("duplicate " + std::string(what) + " id '" + id + "'");
      }
    }
  };
  std::vector<std::string> dm_ids, criterion_ids;
  for (const auto& dm : decision_makers) dm_ids.push_back(dm.id);
  for (const auto& c : criteria) criterion_ids.push_back(c.id);
  check_unique(dm_ids, "decision maker");
  check_unique(criterion_ids, "criterion");
  check_unique(suppliers, "supplier");

  for (const auto& c : criteria) {
    if (c.importance.size() != decision_makers.size()) {
      throw DataError("criterion " + c.id + " has " + std::to_string(c.importance.size()) +
                      " importance ratings for " + std::to_string(decision_makers.size()) +
                      " decision makers");
    }
  }

  if (numeric_values.size() != criteria.size() || linguistic_values.size() != criteria.size()) {
    throw DataError("assessment tensor does not cover every criterion");
  }
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const auto& c = criteria[j];
    if (c.kind == CriterionKind::numerical) {
      if (numeric_values[j].size() != suppliers.size()) {
        throw DataError("criterion " + c.id + " is missing supplier rows");
      }
      for (std::size_t i = 0; i < suppliers.size(); ++i) {
        if (numeric_values[j][i].size() != decision_makers.size()) {
          throw DataError("criterion " + c.id + " is missing assessments for supplier " +
                          suppliers[i]);
        }
        for (std::size_t k = 0; k < decision_makers.size(); ++k) {
          if (!std::isfinite(numeric_values[j][i][k])) {
            throw DataError("non-finite value at " +
                            cell_name(suppliers[i], c.id, decision_makers[k].id));
          }
        }
      }
    } else {
      if (linguistic_values[j].size() != suppliers.size()) {
        throw DataError("criterion " + c.id + " is missing supplier rows");
      }
      for (std::size_t i = 0; i < suppliers.size(); ++i) {
        if (linguistic_values[j][i].size() != decision_makers.size()) {
          throw DataError("criterion " + c.id + " is missing assessments for supplier " +
                          suppliers[i]);
        }
      }
    }
  }
}

namespace {

DecisionDataset dataset_from_json(const ordered_json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw DataError("dataset document must be a JSON object");
  for (const char* key : {"decision_makers", "criteria", "suppliers", "assessments"}) {
    if (!doc.contains(key)) throw DataError(std::string("missing section '") + key + "'");
  }

  DecisionDataset ds;
  for (const auto& dm : doc.at("decision_makers")) {
    DecisionMakerSpec spec;
    spec.id = dm.at("id").get<std::string>();
    spec.importance = parse_weight_term(dm.at("importance").get<std::string>());
    ds.decision_makers.push_back(std::move(spec));
  }
  for (const auto& c : doc.at("criteria")) {
    CriterionSpec spec;
    spec.id = c.at("id").get<std::string>();
    spec.name = c.value("name", spec.id);
    spec.kind = parse_criterion_kind(c.at("kind").get<std::string>());
    spec.objective = parse_objective(c.at("objective").get<std::string>());
    const auto& importance = c.at("importance");
    for (const auto& dm : ds.decision_makers) {
      if (!importance.contains(dm.id)) {
        throw DataError("criterion " + spec.id + " has no importance rating from " + dm.id);
      }
      spec.importance.push_back(parse_weight_term(importance.at(dm.id).get<std::string>()));
    }
    ds.criteria.push_back(std::move(spec));
  }
  for (const auto& s : doc.at("suppliers")) ds.suppliers.push_back(s.get<std::string>());

  std::vector<RawAssessment> raw;
  const auto& assessments = doc.at("assessments");
  if (assessments.is_string()) {
    auto csv_path = base_dir / assessments.get<std::string>();
    raw = parse_assessments_csv(read_file(csv_path));
  } else if (assessments.is_array()) {
    for (const auto& a : assessments) {
      RawAssessment r;
      r.supplier = a.at("supplier").get<std::string>();
      r.criterion = a.at("criterion").get<std::string>();
      r.dm = a.at("dm").get<std::string>();
      const auto& value = a.at("value");
      if (value.is_number()) {
        r.is_number = true;
        r.number = value.get<double>();
      } else if (value.is_string()) {
        r.text = value.get<std::string>();
      } else {
        throw DataError("assessment value at " + cell_name(r.supplier, r.criterion, r.dm) +
                        " must be a number or a performance term");
      }
      raw.push_back(std::move(r));
    }
  } else {
    throw DataError("'assessments' must be an array or a CSV file path");
  }

  std::size_t nc = ds.criteria.size();
  std::size_t ns = ds.suppliers.size();
  std::size_t nd = ds.decision_makers.size();
  ds.numeric_values.assign(nc, {});
  ds.linguistic_values.assign(nc, {});
  std::vector<std::vector<std::vector<bool>>> filled(
      nc, std::vector<std::vector<bool>>(ns, std::vector<bool>(nd, false)));
  for (std::size_t j = 0; j < nc; ++j) {
    if (ds.criteria[j].kind == CriterionKind::numerical) {
      ds.numeric_values[j].assign(ns, std::vector<double>(nd, 0.0));
    } else {
      ds.linguistic_values[j].assign(ns,
                                     std::vector<PerformanceTerm>(nd, PerformanceTerm::M));
    }
  }

  auto index_of = [](const std::vector<std::string>& ids, const std::string& id,
                     const char* what) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) {
      throw DataError("assessment references unknown " + std::string(what) + " '" + id + "'");
    }
    return static_cast<std::size_t>(it - ids.begin());
  };
  std::vector<std::string> dm_ids, criterion_ids;
  for (const auto& dm : ds.decision_makers) dm_ids.push_back(dm.id);
  for (const auto& c : ds.criteria) criterion_ids.push_back(c.id);

  for (const auto& a : raw) {
    std::size_t i = index_of(ds.suppliers, a.supplier, "supplier");
    std::size_t j = index_of(criterion_ids, a.criterion, "criterion");
    std::size_t k = index_of(dm_ids, a.dm, "decision maker");
    if (filled[j][i][k]) {
      throw DataError("duplicate assessment for " + cell_name(a.supplier, a.criterion, a.dm));
    }
    filled[j][i][k] = true;
    if (ds.criteria[j].kind == CriterionKind::numerical) {
      if (!a.is_number) {
        throw DataError("numerical criterion " + a.criterion + " got '" + a.text + "' at " +
                        cell_name(a.supplier, a.criterion, a.dm));
      }
      ds.numeric_values[j][i][k] = a.number;
    } else {
      if (a.is_number) {
        throw DataError("linguistic criterion " + a.criterion + " got a number at " +
                        cell_name(a.supplier, a.criterion, a.dm));
      }
      ds.linguistic_values[j][i][k] = parse_performance_term(a.text);
    }
  }
  for (std::size_t j = 0; j < nc; ++j) {
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t k = 0; k < nd; ++k) {
        if (!filled[j][i][k]) {
          throw DataError("missing assessment for " +
                          cell_name(ds.suppliers[i], criterion_ids[j], dm_ids[k]));
        }
      }
    }
  }

  ds.validate();
  return ds;
}

}  // namespace

DecisionDataset parse_dataset(const std::string& json_text,
                              const std::filesystem::path& base_dir) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("dataset is not valid JSON: ") + e.what());
  }
  try {
    return dataset_from_json(doc, base_dir);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("dataset schema violation: ") + e.what());
  }
}

DecisionDataset load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_file(path), path.parent_path());
}

std::string serialize_dataset(const DecisionDataset& ds) {
  ordered_json doc;
  doc["decision_makers"] = ordered_json::array();
  for (const auto& dm : ds.decision_makers) {
    doc["decision_makers"].push_back(
        {{"id", dm.id}, {"importance", std::string(to_string(dm.importance))}});
  }
  doc["criteria"] = ordered_json::array();
  for (const auto& c : ds.criteria) {
    ordered_json importance = ordered_json::object();
    for (std::size_t k = 0; k < ds.decision_makers.size(); ++k) {
      importance[ds.decision_makers[k].id] = std::string(to_string(c.importance[k]));
    }
    doc["criteria"].push_back({{"id", c.id},
                               {"name", c.name},
                               {"kind", std::string(to_string(c.kind))},
                               {"objective", std::string(to_string(c.objective))},
                               {"importance", std::move(importance)}});
  }
  doc["suppliers"] = ds.suppliers;
  doc["assessments"] = ordered_json::array();
  for (std::size_t j = 0; j < ds.criteria.size(); ++j) {
    for (std::size_t i = 0; i < ds.suppliers.size(); ++i) {
      for (std::size_t k = 0; k < ds.decision_makers.size(); ++k) {
        ordered_json cell = {{"supplier", ds.suppliers[i]},
                             {"criterion", ds.criteria[j].id},
                             {"dm", ds.decision_makers[k].id}};
        if (ds.criteria[j].kind == CriterionKind::numerical) {
          cell["value"] = ds.numeric_values[j][i][k];
        } else {
          cell["value"] = std::string(to_string(ds.linguistic_values[j][i][k]));
        }
        doc["assessments"].push_back(std::move(cell));
      }
    }
  }
  return doc.dump(2) + "\n";
}

void save_dataset(const DecisionDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << serialize_dataset(ds);
}

std::vector<GenCriterion> default_criteria_catalogue() {
  return {
      {"C1", "critical node count", CriterionKind::numerical, Objective::cost, 1.0, 30.0},
      {"C2", "buffer capacity", CriterionKind::numerical, Objective::benefit, 100.0, 2000.0},
      {"C3", "lead time", CriterionKind::numerical, Objective::cost, 5.0, 40.0},
      {"C4", "supply chain density", CriterionKind::linguistic, Objective::cost, 0.0, 0.0},
      {"C5", "supply chain complexity", CriterionKind::linguistic, Objective::benefit, 0.0, 0.0},
      {"C6", "responsiveness", CriterionKind::linguistic, Objective::benefit, 0.0, 0.0},
      {"C7", "re-engineering capability", CriterionKind::linguistic, Objective::benefit, 0.0, 0.0},
      {"C8", "resource flexibility", CriterionKind::linguistic, Objective::benefit, 0.0, 0.0},
  };
}

std::vector<GenCriterion> load_criteria_catalogue(const std::filesystem::path& path) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("criteria spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DataError("criteria spec must be a JSON array");
  std::vector<GenCriterion> out;
  try {
    for (const auto& c : doc) {
      GenCriterion g;
      g.id = c.at("id").get<std::string>();
      g.name = c.value("name", g.id);
      g.kind = parse_criterion_kind(c.at("kind").get<std::string>());
      g.objective = parse_objective(c.at("objective").get<std::string>());
      if (g.kind == CriterionKind::numerical) {
        const auto& range = c.at("range");
        g.range_lo = range.at(0).get<double>();
        g.range_hi = range.at(1).get<double>();
        if (!(g.range_lo < g.range_hi)) {
          throw DataError("criterion " + g.id + " has an empty value range");
        }
      }
      out.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("criteria spec schema violation: ") + e.what());
  }
  if (out.empty()) throw DataError("criteria spec lists no criteria");
  return out;
}

DecisionDataset generate_dataset(const GenOptions& options) {
  if (options.suppliers == 0 || options.decision_makers == 0) {
    throw DataError("generator shape must be positive");
  }
  std::vector<GenCriterion> catalogue =
      options.criteria.empty() ? default_criteria_catalogue() : options.criteria;

  SplitMix64 rng(options.seed);
  DecisionDataset ds;
  for (std::size_t k = 0; k < options.decision_makers; ++k) {
    DecisionMakerSpec dm;
    dm.id = "DM" + std::to_string(k + 1);
    dm.importance = static_cast<WeightTerm>(rng.pick(kWeightTermCount));
    ds.decision_makers.push_back(std::move(dm));
  }
  for (const auto& g : catalogue) {
    CriterionSpec spec;
    spec.id = g.id;
    spec.name = g.name;
    spec.kind = g.kind;
    spec.objective = g.objective;
    for (std::size_t k = 0; k < options.decision_makers; ++k) {
      spec.importance.push_back(static_cast<WeightTerm>(rng.pick(kWeightTermCount)));
    }
    ds.criteria.push_back(std::move(spec));
  }
  for (std::size_t i = 0; i < options.suppliers; ++i) {
    ds.suppliers.push_back("S" + std::to_string(i + 1));
  }

  ds.numeric_values.assign(catalogue.size(), {});
  ds.linguistic_values.assign(catalogue.size(), {});
  for (std::size_t j = 0; j < catalogue.size(); ++j) {
    const auto& g = catalogue[j];
    if (g.kind == CriterionKind::numerical) {
      ds.numeric_values[j].assign(options.suppliers,
                                  std::vector<double>(options.decision_makers, 0.0));
      for (std::size_t i = 0; i < options.suppliers; ++i) {
        for (std::size_t k = 0; k < options.decision_makers; ++k) {
          double v = g.range_lo + rng.uniform01() * (g.range_hi - g.range_lo);
          ds.numeric_values[j][i][k] = std::round(v * 1000.0) / 1000.0;
        }
      }
    } else {
      ds.linguistic_values[j].assign(
          options.suppliers,
          std::vector<PerformanceTerm>(options.decision_makers, PerformanceTerm::M));
      for (std::size_t i = 0; i < options.suppliers; ++i) {
        for (std::size_t k = 0; k < options.decision_makers; ++k) {
          ds.linguistic_values[j][i][k] =
              static_cast<PerformanceTerm>(rng.pick(kPerformanceTermCount));
        }
      }
    }
  }

  ds.validate();
  return ds;
}

}  // namespace mcda
