#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "mcda/pipeline.hpp"
#include "mcda/sensitivity.hpp"

namespace mcda {

enum class ReportFormat { json, csv, table };

ReportFormat parse_report_format(std::string_view s);

// Writes the ranking tables plus any sweep curves and association table into
// out_dir and returns the written paths. Serialization is deterministic:
// identical inputs produce byte-identical files.
std::vector<std::filesystem::path> emit_report(const PipelineResult& result,
                                               const std::vector<SweepResult>& sweeps,
                                               const std::optional<AssociationTable>& association,
                                               const std::filesystem::path& out_dir,
                                               ReportFormat format);

// The table-format ranking text, also used for stdout echoes.
std::string render_ranking_table(const RankingResult& ranking);

}  // namespace mcda
