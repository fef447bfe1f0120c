#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mcda/report.hpp"

using namespace mcda;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PipelineResult bundled_result(RunConfig config = {}) {
  static const DecisionDataset ds =
      load_dataset(fs::path(MCDA_SOURCE_DIR) / "data" / "bundled_dataset.json");
  return run_pipeline(ds, config);
}

}  // namespace

TEST_CASE("json report round-trips the coefficients exactly") {
  PipelineResult result = bundled_result();
  fs::path dir = fs::temp_directory_path() / "mcda_report_json";
  fs::remove_all(dir);
  emit_report(result, {}, std::nullopt, dir, ReportFormat::json);

  auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
  for (const auto& ranking : result.rankings) {
    const auto& rows = doc.at("rankings").at(std::string(to_string(ranking.approach)));
    REQUIRE(rows.size() == ranking.scores.size());
    for (std::size_t i = 0; i < ranking.scores.size(); ++i) {
      CHECK(rows[i].at("cc").get<double>() == ranking.scores[i].cc);
      CHECK(rows[i].at("rank").get<int>() == ranking.scores[i].rank);
      CHECK(rows[i].at("supplier").get<std::string>() == ranking.scores[i].supplier);
    }
  }
  // No sweeps were given, so the report has no sensitivity section.
  CHECK(!doc.contains("sweeps"));
  CHECK(!doc.contains("association"));
  fs::remove_all(dir);
}

TEST_CASE("table report mirrors the distance/coefficient/rank column order") {
  PipelineResult result = bundled_result();
  std::string table = render_ranking_table(result.ranking(Approach::svns));
  std::string header = table.substr(table.find('\n') + 1);
  header = header.substr(0, header.find('\n'));
  auto d_plus = header.find("d+");
  auto d_minus = header.find("d-");
  auto cc = header.find("cc");
  auto rank = header.find("rank");
  CHECK(d_plus != std::string::npos);
  CHECK(d_plus < d_minus);
  CHECK(d_minus < cc);
  CHECK(cc < rank);
  CHECK(rank != std::string::npos);
}

TEST_CASE("csv sweep files carry alpha, supplier, cc columns") {
  static const DecisionDataset ds =
      load_dataset(fs::path(MCDA_SOURCE_DIR) / "data" / "bundled_dataset.json");
  RunConfig config;
  auto grid = default_alpha_grid();
  SweepResult sweep = sweep_weight(ds, config, ds.criterion_index("C7"), grid, Approach::svns);

  PipelineResult result = bundled_result();
  fs::path dir = fs::temp_directory_path() / "mcda_report_csv";
  fs::remove_all(dir);
  emit_report(result, {sweep}, std::nullopt, dir, ReportFormat::csv);
  std::string csv = slurp(dir / "sweep_C7_svns.csv");
  CHECK(csv.rfind("alpha,supplier_id,cc\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 1 + grid.size() * ds.supplier_count());
  fs::remove_all(dir);
}
