#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcda/dataset.hpp"
#include "mcda/errors.hpp"
#include "mcda/pipeline.hpp"
#include "mcda/report.hpp"
#include "mcda/sensitivity.hpp"

namespace {

using namespace mcda;

std::vector<Approach> parse_approaches(const std::string& s) {
  if (s == "svns") return {Approach::svns};
  if (s == "ivfs") return {Approach::ivfs};
  if (s == "both") return {Approach::svns, Approach::ivfs};
  if (s == "classical") return {Approach::classical};
  throw DataError("unknown approach '" + s + "' (expected svns, ivfs, both or classical)");
}

// Either a comma list "0.1,0.25,0.6" or a range "lo:hi:step".
std::vector<double> parse_grid_spec(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0) {
      throw DataError("grid range must look like lo:hi:step with a positive step");
    }
    for (double v = lo; v <= hi + 1e-12; v += step) grid.push_back(v);
  } else {
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t comma = spec.find(',', pos);
      std::string token = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
      try {
        grid.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw DataError("bad grid value '" + token + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (grid.empty()) throw DataError("empty sweep grid");
  return grid;
}

bool quiet_logging() {
  const char* level = std::getenv("MCDA_LOG_LEVEL");
  return level != nullptr && std::string_view(level) == "quiet";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resilient-supplier ranking engine"};
  app.require_subcommand(1);

  // rank
  std::string rank_input, rank_out = "out", rank_format = "table";
  std::string rank_approach = "both", rank_reliability = "on";
  auto* rank_cmd = app.add_subcommand("rank", "Rank the suppliers of a dataset");
  rank_cmd->add_option("--input", rank_input, "dataset JSON file")->required();
  rank_cmd->add_option("--approach", rank_approach, "svns|ivfs|both|classical");
  rank_cmd->add_option("--reliability", rank_reliability, "on|off");
  rank_cmd->add_option("--out", rank_out, "output directory");
  rank_cmd->add_option("--format", rank_format, "json|csv|table");

  // sweep
  std::string sweep_input, sweep_criterion, sweep_grid = "0.1:0.9:0.1";
  std::string sweep_out = "out", sweep_format = "csv";
  std::string sweep_approach = "svns", sweep_reliability = "on";
  bool sweep_parallel = false, sweep_association = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one criterion's representative weight");
  sweep_cmd->add_option("--input", sweep_input, "dataset JSON file")->required();
  sweep_cmd->add_option("--criterion", sweep_criterion, "criterion id");
  sweep_cmd->add_option("--grid", sweep_grid, "comma list or lo:hi:step");
  sweep_cmd->add_option("--approach", sweep_approach, "svns|ivfs|classical");
  sweep_cmd->add_option("--reliability", sweep_reliability, "on|off");
  sweep_cmd->add_option("--out", sweep_out, "output directory");
  sweep_cmd->add_option("--format", sweep_format, "json|csv|table");
  sweep_cmd->add_flag("--parallel", sweep_parallel, "evaluate grid points concurrently");
  sweep_cmd->add_flag("--association", sweep_association,
                      "emit the supplier/criterion association table over all criteria");

  // gen
  std::uint64_t gen_seed = 1;
  std::size_t gen_suppliers = 8, gen_dms = 10;
  std::string gen_criteria_spec, gen_out = "dataset.json";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reproducible random dataset");
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--suppliers", gen_suppliers, "supplier count");
  gen_cmd->add_option("--dms", gen_dms, "decision maker count");
  gen_cmd->add_option("--criteria-spec", gen_criteria_spec, "criteria catalogue JSON");
  gen_cmd->add_option("--out", gen_out, "output dataset path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank_cmd->parsed()) {
      DecisionDataset ds = load_dataset(rank_input);
      RunConfig config;
      config.approaches = parse_approaches(rank_approach);
      if (rank_reliability != "on" && rank_reliability != "off") {
        throw DataError("--reliability must be on or off");
      }
      config.reliability = rank_reliability == "on";
      PipelineResult result = run_pipeline(ds, config);
      auto written = emit_report(result, {}, std::nullopt, rank_out,
                                 parse_report_format(rank_format));
      if (!quiet_logging()) {
        for (const auto& ranking : result.rankings) {
          std::fputs(render_ranking_table(ranking).c_str(), stdout);
          std::fputs("\n", stdout);
        }
        for (const auto& path : written) {
          std::fprintf(stderr, "mcda: wrote %s\n", path.string().c_str());
        }
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      DecisionDataset ds = load_dataset(sweep_input);
      RunConfig config;
      if (sweep_reliability != "on" && sweep_reliability != "off") {
        throw DataError("--reliability must be on or off");
      }
      config.reliability = sweep_reliability == "on";
      std::vector<double> grid = parse_grid_spec(sweep_grid);
      Approach approach = Approach::svns;
      if (sweep_approach == "ivfs") approach = Approach::ivfs;
      else if (sweep_approach == "classical") approach = Approach::classical;
      else if (sweep_approach != "svns") {
        throw DataError("sweep approach must be svns, ivfs or classical");
      }
      config.approaches = {approach};

      std::vector<SweepResult> sweeps;
      std::optional<AssociationTable> association;
      if (sweep_association) {
        association = association_table(ds, config, grid, approach, sweep_parallel);
      } else {
        if (sweep_criterion.empty()) {
          throw DataError("--criterion is required unless --association is given");
        }
        std::size_t j = ds.criterion_index(sweep_criterion);
        sweeps.push_back(approach == Approach::classical
                             ? sweep_classical(ds, j, grid)
                             : sweep_weight(ds, config, j, grid, approach, sweep_parallel));
      }
      PipelineResult result = run_pipeline(ds, config);
      auto written = emit_report(result, sweeps, association, sweep_out,
                                 parse_report_format(sweep_format));
      if (!quiet_logging()) {
        for (const auto& sweep : sweeps) {
          if (sweep.crossovers.empty()) {
            std::fprintf(stdout, "sweep of %s: optimum constant across the grid\n",
                         sweep.criterion.c_str());
          }
          for (const auto& c : sweep.crossovers) {
            std::fprintf(stdout, "sweep of %s: optimum %s -> %s in alpha (%g, %g)\n",
                         sweep.criterion.c_str(), c.outgoing.c_str(), c.incoming.c_str(),
                         c.alpha_lo, c.alpha_hi);
          }
        }
        for (const auto& path : written) {
          std::fprintf(stderr, "mcda: wrote %s\n", path.string().c_str());
        }
      }
      return 0;
    }

    if (gen_cmd->parsed()) {
      GenOptions options;
      options.seed = gen_seed;
      options.suppliers = gen_suppliers;
      options.decision_makers = gen_dms;
      if (!gen_criteria_spec.empty()) {
        options.criteria = load_criteria_catalogue(gen_criteria_spec);
      }
      DecisionDataset ds = generate_dataset(options);
      save_dataset(ds, gen_out);
      if (!quiet_logging()) {
        std::fprintf(stderr, "mcda: wrote %s (%zu suppliers x %zu criteria x %zu makers)\n",
                     gen_out.c_str(), ds.supplier_count(), ds.criterion_count(), ds.dm_count());
      }
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
