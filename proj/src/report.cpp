#include "mcda/report.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "mcda/errors.hpp"

namespace mcda {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::string fmt_fixed(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%10.6f", v);
  return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << contents;
}

ordered_json ranking_json(const RankingResult& ranking) {
  ordered_json rows = ordered_json::array();
  for (const auto& s : ranking.scores) {
    ordered_json row;
    row["supplier"] = s.supplier;
    if (ranking.approach == Approach::ivfs) {
      row["d1_plus"] = s.d1_plus;
      row["d2_plus"] = s.d2_plus;
      row["d1_minus"] = s.d1_minus;
      row["d2_minus"] = s.d2_minus;
      row["rc1"] = s.rc1;
      row["rc2"] = s.rc2;
    } else {
      row["d_plus"] = s.d_plus;
      row["d_minus"] = s.d_minus;
    }
    row["cc"] = s.cc;
    row["rank"] = s.rank;
    row["tied"] = s.tied;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ranking_csv(const RankingResult& ranking) {
  std::string out;
  if (ranking.approach == Approach::ivfs) {
    out = "supplier,d1_plus,d2_plus,d1_minus,d2_minus,rc1,rc2,cc,rank\n";
    for (const auto& s : ranking.scores) {
      out += s.supplier + "," + fmt(s.d1_plus) + "," + fmt(s.d2_plus) + "," + fmt(s.d1_minus) +
             "," + fmt(s.d2_minus) + "," + fmt(s.rc1) + "," + fmt(s.rc2) + "," + fmt(s.cc) + "," +
             std::to_string(s.rank) + "\n";
    }
  } else {
    out = "supplier,d_plus,d_minus,cc,rank\n";
    for (const auto& s : ranking.scores) {
      out += s.supplier + "," + fmt(s.d_plus) + "," + fmt(s.d_minus) + "," + fmt(s.cc) + "," +
             std::to_string(s.rank) + "\n";
    }
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "alpha,supplier_id,cc\n";
  for (std::size_t g = 0; g < sweep.grid.size(); ++g) {
    for (std::size_t i = 0; i < sweep.suppliers.size(); ++i) {
      out += fmt(sweep.grid[g]) + "," + sweep.suppliers[i] + "," + fmt(sweep.cc[g][i]) + "\n";
    }
  }
  return out;
}

std::string association_csv(const AssociationTable& table) {
  std::string out = "supplier,criterion,association,flat\n";
  for (std::size_t i = 0; i < table.suppliers.size(); ++i) {
    for (std::size_t j = 0; j < table.criteria.size(); ++j) {
      out += table.suppliers[i] + "," + table.criteria[j] + "," +
             (table.positive[i][j] ? "P" : "N") + "," + (table.flat[i][j] ? "yes" : "no") + "\n";
    }
  }
  return out;
}

ordered_json sweep_json(const SweepResult& sweep) {
  ordered_json doc;
  doc["criterion"] = sweep.criterion;
  doc["approach"] = std::string(to_string(sweep.approach));
  doc["grid"] = sweep.grid;
  ordered_json curves = ordered_json::object();
  for (std::size_t i = 0; i < sweep.suppliers.size(); ++i) {
    std::vector<double> curve;
    curve.reserve(sweep.grid.size());
    for (std::size_t g = 0; g < sweep.grid.size(); ++g) curve.push_back(sweep.cc[g][i]);
    curves[sweep.suppliers[i]] = curve;
  }
  doc["curves"] = std::move(curves);
  ordered_json crossings = ordered_json::array();
  for (const auto& c : sweep.crossovers) {
    crossings.push_back({{"alpha_lo", c.alpha_lo},
                         {"alpha_hi", c.alpha_hi},
                         {"outgoing", c.outgoing},
                         {"incoming", c.incoming}});
  }
  doc["crossovers"] = std::move(crossings);
  return doc;
}

}  // namespace

ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "table") return ReportFormat::table;
  throw DataError("unknown report format '" + std::string(s) + "'");
}

std::string render_ranking_table(const RankingResult& ranking) {
  std::string out;
  out += std::string(to_string(ranking.approach)) + " ranking\n";
  if (ranking.approach == Approach::ivfs) {
    out += "supplier        d1+        d2+        d1-        d2-         cc  rank\n";
    for (const auto& s : ranking.scores) {
      char line[256];
      std::snprintf(line, sizeof(line), "%-8s %s %s %s %s %s %5d%s\n", s.supplier.c_str(),
                    fmt_fixed(s.d1_plus).c_str(), fmt_fixed(s.d2_plus).c_str(),
                    fmt_fixed(s.d1_minus).c_str(), fmt_fixed(s.d2_minus).c_str(),
                    fmt_fixed(s.cc).c_str(), s.rank, s.tied ? " *" : "");
      out += line;
    }
  } else {
    out += "supplier         d+         d-         cc  rank\n";
    for (const auto& s : ranking.scores) {
      char line[256];
      std::snprintf(line, sizeof(line), "%-8s %s %s %s %5d%s\n", s.supplier.c_str(),
                    fmt_fixed(s.d_plus).c_str(), fmt_fixed(s.d_minus).c_str(),
                    fmt_fixed(s.cc).c_str(), s.rank, s.tied ? " *" : "");
      out += line;
    }
  }
  bool any_tied = false;
  for (const auto& s : ranking.scores) any_tied |= s.tied;
  if (any_tied) out += "* tied closeness coefficient; order follows the input\n";
  return out;
}

std::vector<std::filesystem::path> emit_report(const PipelineResult& result,
                                               const std::vector<SweepResult>& sweeps,
                                               const std::optional<AssociationTable>& association,
                                               const std::filesystem::path& out_dir,
                                               ReportFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create output directory " + out_dir.string());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::filesystem::path& name, const std::string& contents) {
    auto path = out_dir / name;
    write_file(path, contents);
    written.push_back(path);
  };

  if (format == ReportFormat::json) {
    ordered_json doc;
    ordered_json approaches = ordered_json::object();
    for (const auto& ranking : result.rankings) {
      approaches[std::string(to_string(ranking.approach))] = ranking_json(ranking);
    }
    doc["rankings"] = std::move(approaches);
    if (!result.dm_weights.sigma.empty()) doc["dm_weights"] = result.dm_weights.sigma;
    if (!result.weights.svns.empty()) {
      ordered_json weights = ordered_json::array();
      for (std::size_t j = 0; j < result.weights.svns.size(); ++j) {
        const Svn& w = result.weights.svns[j];
        const Ivfs& v = result.weights.ivfs[j];
        weights.push_back(
            {{"svns", {w.truth, w.indeterminacy, w.falsity}},
             {"ivfs", {v.lo, v.lo_inner, v.peak, v.hi_inner, v.hi}},
             {"alpha", result.weights.alpha[j]}});
      }
      doc["criteria_weights"] = std::move(weights);
    }
    if (!result.numeric.empty()) {
      ordered_json reliability = ordered_json::array();
      for (const auto& n : result.numeric) {
        reliability.push_back({{"criterion_index", n.criterion_index},
                               {"frame_lo", n.frame.lo},
                               {"frame_hi", n.frame.hi},
                               {"class_count", n.frame.class_count},
                               {"r_static", n.profile.r_static},
                               {"r_dynamic", n.profile.r_dynamic},
                               {"r_comprehensive", n.profile.r_comprehensive},
                               {"r_normalized", n.profile.r_normalized},
                               {"applied", n.applied_reliability}});
      }
      doc["reliability"] = std::move(reliability);
    }
    if (!sweeps.empty()) {
      ordered_json sweep_docs = ordered_json::array();
      for (const auto& sweep : sweeps) sweep_docs.push_back(sweep_json(sweep));
      doc["sweeps"] = std::move(sweep_docs);
    }
    if (association) {
      ordered_json assoc;
      assoc["suppliers"] = association->suppliers;
      assoc["criteria"] = association->criteria;
      ordered_json cells = ordered_json::array();
      for (std::size_t i = 0; i < association->suppliers.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < association->criteria.size(); ++j) {
          row.push_back(association->flat[i][j] ? "N(flat)"
                                                : (association->positive[i][j] ? "P" : "N"));
        }
        cells.push_back(std::move(row));
      }
      assoc["cells"] = std::move(cells);
      doc["association"] = std::move(assoc);
    }
    emit("report.json", doc.dump(2) + "\n");
    return written;
  }

  if (format == ReportFormat::csv) {
    for (const auto& ranking : result.rankings) {
      emit("ranking_" + std::string(to_string(ranking.approach)) + ".csv", ranking_csv(ranking));
    }
    for (const auto& sweep : sweeps) {
      emit("sweep_" + sweep.criterion + "_" + std::string(to_string(sweep.approach)) + ".csv",
           sweep_csv(sweep));
    }
    if (association) emit("association.csv", association_csv(*association));
    return written;
  }

  std::string text;
  for (const auto& ranking : result.rankings) {
    text += render_ranking_table(ranking);
    text += "\n";
  }
  for (const auto& sweep : sweeps) {
    text += "sweep of " + sweep.criterion + " (" + std::string(to_string(sweep.approach)) +
            ")\n";
    if (sweep.crossovers.empty()) {
      text += "  optimum constant across the grid\n";
    } else {
      for (const auto& c : sweep.crossovers) {
        text += "  optimum changes from " + c.outgoing + " to " + c.incoming + " between alpha " +
                fmt(c.alpha_lo) + " and " + fmt(c.alpha_hi) + "\n";
      }
    }
    text += "\n";
  }
  if (association) {
    text += "association (P: closeness grows with the criterion weight)\n";
    for (std::size_t i = 0; i < association->suppliers.size(); ++i) {
      text += association->suppliers[i] + ":";
      for (std::size_t j = 0; j < association->criteria.size(); ++j) {
        text += " " + association->criteria[j] + "=" +
                (association->flat[i][j] ? "N(flat)" : (association->positive[i][j] ? "P" : "N"));
      }
      text += "\n";
    }
  }
  emit("report.txt", text);
  return written;
}

}  // namespace mcda
