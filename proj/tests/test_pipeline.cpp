#include <cmath>
#include <vector>

#include "doctest.h"
#include "mcda/errors.hpp"
#include "mcda/pipeline.hpp"
#include "support.hpp"

using namespace mcda;

namespace {

DecisionDataset small_mixed_dataset() {
  GenOptions options;
  options.seed = 9;
  options.suppliers = 5;
  options.decision_makers = 4;
  return generate_dataset(options);
}

// A full, naive reimplementation of both pipelines with plain loops. It
// shares no code with the library beyond the lexicon tables and is the
// reference the engine must match stage by stage.
struct NaiveResult {
  std::vector<double> sigma;
  std::vector<std::array<double, 3>> criteria_svns;
  std::vector<double> svns_cc;
  std::vector<double> ivfs_cc;
};

NaiveResult naive_pipelines(const DecisionDataset& ds, bool reliability_on) {
  NaiveResult out;
  std::size_t ns = ds.supplier_count();
  std::size_t nc = ds.criterion_count();
  std::size_t nd = ds.dm_count();

  // Maker weights.
  double score_total = 0.0;
  std::vector<double> scores(nd);
  for (std::size_t k = 0; k < nd; ++k) {
    Svn v = weight_svn(ds.decision_makers[k].importance);
    scores[k] = v.truth + v.indeterminacy * v.truth / (v.truth + v.falsity);
    score_total += scores[k];
  }
  out.sigma.resize(nd);
  for (std::size_t k = 0; k < nd; ++k) out.sigma[k] = scores[k] / score_total;

  // Criterion weights, both schemes.
  std::vector<std::array<double, 3>> w_svns(nc);
  std::vector<std::array<double, 5>> w_ivfs(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    double pa = 1, pb = 1, pc = 1;
    std::array<double, 5> acc{0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < nd; ++k) {
      Svn row = weight_svn(ds.criteria[j].importance[k]);
      pa *= std::pow(1.0 - row.truth, out.sigma[k]);
      pb *= std::pow(row.indeterminacy, out.sigma[k]);
      pc *= std::pow(row.falsity, out.sigma[k]);
      Ivfs vi = weight_ivfs(ds.decision_makers[k].importance);
      Ivfs irow = weight_ivfs(ds.criteria[j].importance[k]);
      acc[0] += vi.lo * irow.lo;
      acc[1] += vi.lo_inner * irow.lo_inner;
      acc[2] += vi.peak * irow.peak;
      acc[3] += vi.hi_inner * irow.hi_inner;
      acc[4] += vi.hi * irow.hi;
    }
    w_svns[j] = {1.0 - pa, pb, pc};
    for (double& v : acc) v /= static_cast<double>(nd);
    w_ivfs[j] = acc;
    out.criteria_svns.push_back(w_svns[j]);
  }

  // Numerical criteria: frames, ranges, memberships, reliability.
  std::vector<std::array<double, 3>> svns_cells(ns * nc);
  std::vector<std::array<double, 5>> ivfs_cells(ns * nc);
  std::vector<std::size_t> numeric;
  for (std::size_t j = 0; j < nc; ++j) {
    if (ds.criteria[j].kind == CriterionKind::numerical) numeric.push_back(j);
  }
  std::vector<double> log_r(numeric.size());
  std::vector<std::vector<std::vector<double>>> all_memberships(numeric.size());
  std::vector<Frame> frames;
  for (std::size_t f = 0; f < numeric.size(); ++f) {
    std::size_t j = numeric[f];
    double alpha = w_svns[j][0];
    int count = alpha < 0.3 ? 3 : alpha < 0.5 ? 5 : alpha < 0.75 ? 7 : 9;
    double lo = ds.numeric_values[j][0][0], hi = lo;
    for (const auto& row : ds.numeric_values[j]) {
      for (double v : row) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    Frame frame = build_frame_over(lo, hi, count);
    frames.push_back(frame);

    all_memberships[f].resize(ns);
    double risk = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      double rlo = ds.numeric_values[j][i][0], rhi = rlo;
      for (double v : ds.numeric_values[j][i]) {
        rlo = std::min(rlo, v);
        rhi = std::max(rhi, v);
      }
      all_memberships[f][i].resize(count);
      for (int l = 0; l < count; ++l) {
        // Quadrature instead of the closed form.
        auto [slo, shi] = frame.class_support(l);
        double cut_lo = std::max(rlo, slo), cut_hi = std::min(rhi, shi);
        if (rlo == rhi) {
          all_memberships[f][i][l] = membership_at(frame, l, rlo);
        } else if (cut_hi < cut_lo) {
          all_memberships[f][i][l] = 0.0;
        } else if (cut_hi == cut_lo) {
          all_memberships[f][i][l] = membership_at(frame, l, cut_lo);
        } else {
          double integral = testsupport::trapezoid(
              [&](double x) { return membership_at(frame, l, x); }, rlo, rhi, 20000);
          all_memberships[f][i][l] = integral / (cut_hi - cut_lo);
        }
      }
      double mid = 0.5 * (rlo + rhi);
      for (int p = 0; p + 1 < count; ++p) {
        risk += std::abs(mid - frame.point(2 * p + 2)) / (hi - lo);
      }
    }
    double r_static = 0.0;
    for (int p = 0; p + 1 < count; ++p) {
      r_static += 1.0 - class_similarity(frame, p, p + 1);
    }
    log_r[f] = std::log(r_static) + risk;
  }
  double log_max = numeric.empty() ? 0.0 : *std::max_element(log_r.begin(), log_r.end());
  for (std::size_t f = 0; f < numeric.size(); ++f) {
    std::size_t j = numeric[f];
    double r_star = reliability_on ? std::exp(log_r[f] - log_max) : 1.0;
    for (std::size_t i = 0; i < ns; ++i) {
      double msum = 0.0;
      for (double m : all_memberships[f][i]) msum += m;
      std::array<double, 3> s{0, 0, 0};
      std::array<double, 5> v{0, 0, 0, 0, 0};
      for (std::size_t l = 0; l < all_memberships[f][i].size(); ++l) {
        double weight = r_star * all_memberships[f][i][l] / msum;
        Svn row = performance_svn(frames[f].classes[l]);
        s[0] += weight * row.truth;
        s[1] += weight * row.indeterminacy;
        s[2] += weight * row.falsity;
        Ivfs irow = performance_ivfs(frames[f].classes[l]);
        v[0] += weight * irow.lo;
        v[1] += weight * irow.lo_inner;
        v[2] += weight * irow.peak;
        v[3] += weight * irow.hi_inner;
        v[4] += weight * irow.hi;
      }
      svns_cells[i * nc + j] = s;
      ivfs_cells[i * nc + j] = v;
    }
  }

  // Linguistic criteria.
  for (std::size_t j = 0; j < nc; ++j) {
    if (ds.criteria[j].kind != CriterionKind::linguistic) continue;
    for (std::size_t i = 0; i < ns; ++i) {
      double pa = 1, pb = 1, pc = 1;
      std::array<double, 5> acc{0, 0, 0, 0, 0};
      for (std::size_t k = 0; k < nd; ++k) {
        Svn row = performance_svn(ds.linguistic_values[j][i][k]);
        pa *= std::pow(1.0 - row.truth, out.sigma[k]);
        pb *= std::pow(row.indeterminacy, out.sigma[k]);
        pc *= std::pow(row.falsity, out.sigma[k]);
        Ivfs vi = weight_ivfs(ds.decision_makers[k].importance);
        Ivfs irow = performance_ivfs(ds.linguistic_values[j][i][k]);
        acc[0] += vi.lo * irow.lo;
        acc[1] += vi.lo_inner * irow.lo_inner;
        acc[2] += vi.peak * irow.peak;
        acc[3] += vi.hi_inner * irow.hi_inner;
        acc[4] += vi.hi * irow.hi;
      }
      svns_cells[i * nc + j] = {1.0 - pa, pb, pc};
      for (double& v : acc) v /= static_cast<double>(nd);
      ivfs_cells[i * nc + j] = acc;
    }
  }

  // Weighted SVNS matrix, ideals, distances.
  std::vector<std::array<double, 3>> weighted(ns * nc);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const auto& d = svns_cells[i * nc + j];
      const auto& w = w_svns[j];
      weighted[i * nc + j] = {d[0] * w[0], d[1] + w[1] - d[1] * w[1], d[2] + w[2] - d[2] * w[2]};
    }
  }
  out.svns_cc.resize(ns);
  {
    std::vector<std::array<double, 3>> pis(nc), nis(nc);
    for (std::size_t j = 0; j < nc; ++j) {
      std::array<double, 3> mins = weighted[j], maxs = weighted[j];
      for (std::size_t i = 1; i < ns; ++i) {
        for (int p = 0; p < 3; ++p) {
          mins[p] = std::min(mins[p], weighted[i * nc + j][p]);
          maxs[p] = std::max(maxs[p], weighted[i * nc + j][p]);
        }
      }
      if (ds.criteria[j].objective == Objective::benefit) {
        pis[j] = {maxs[0], mins[1], mins[2]};
        nis[j] = {mins[0], maxs[1], maxs[2]};
      } else {
        pis[j] = {mins[0], maxs[1], maxs[2]};
        nis[j] = {maxs[0], mins[1], mins[2]};
      }
    }
    for (std::size_t i = 0; i < ns; ++i) {
      double plus = 0, minus = 0;
      for (std::size_t j = 0; j < nc; ++j) {
        for (int p = 0; p < 3; ++p) {
          plus += (weighted[i * nc + j][p] - pis[j][p]) * (weighted[i * nc + j][p] - pis[j][p]);
          minus += (weighted[i * nc + j][p] - nis[j][p]) * (weighted[i * nc + j][p] - nis[j][p]);
        }
      }
      out.svns_cc[i] = std::sqrt(minus) / (std::sqrt(plus) + std::sqrt(minus));
    }
  }

  // IVFS normalization, weighting, distances.
  out.ivfs_cc.resize(ns);
  {
    std::vector<std::array<double, 5>> normalized(ns * nc);
    for (std::size_t j = 0; j < nc; ++j) {
      if (ds.criteria[j].objective == Objective::benefit) {
        double upper = ivfs_cells[j][4];
        for (std::size_t i = 1; i < ns; ++i) upper = std::max(upper, ivfs_cells[i * nc + j][4]);
        for (std::size_t i = 0; i < ns; ++i) {
          for (int p = 0; p < 5; ++p) normalized[i * nc + j][p] = ivfs_cells[i * nc + j][p] / upper;
        }
      } else {
        double lower = ivfs_cells[j][0];
        for (std::size_t i = 1; i < ns; ++i) lower = std::min(lower, ivfs_cells[i * nc + j][0]);
        for (std::size_t i = 0; i < ns; ++i) {
          std::array<double, 5> r;
          for (int p = 0; p < 5; ++p) r[p] = lower / ivfs_cells[i * nc + j][p];
          std::sort(r.begin(), r.end());
          normalized[i * nc + j] = r;
        }
      }
      for (std::size_t i = 0; i < ns; ++i) {
        for (int p = 0; p < 5; ++p) normalized[i * nc + j][p] *= w_ivfs[j][p];
      }
    }
    for (std::size_t i = 0; i < ns; ++i) {
      double d1p = 0, d2p = 0, d1m = 0, d2m = 0;
      for (std::size_t j = 0; j < nc; ++j) {
        const auto& c = normalized[i * nc + j];
        d1p += std::sqrt(((c[0] - 1) * (c[0] - 1) + (c[2] - 1) * (c[2] - 1) +
                          (c[3] - 1) * (c[3] - 1)) /
                         3.0);
        d2p += std::sqrt(((c[1] - 1) * (c[1] - 1) + (c[2] - 1) * (c[2] - 1) +
                          (c[4] - 1) * (c[4] - 1)) /
                         3.0);
        d1m += std::sqrt((c[0] * c[0] + c[2] * c[2] + c[3] * c[3]) / 3.0);
        d2m += std::sqrt((c[1] * c[1] + c[2] * c[2] + c[4] * c[4]) / 3.0);
      }
      out.ivfs_cc[i] = 0.5 * (d2m / (d2p + d2m) + d1m / (d1p + d1m));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("pipeline matches an independent stagewise recomputation") {
  DecisionDataset ds = small_mixed_dataset();
  for (bool reliability : {true, false}) {
    RunConfig config;
    config.reliability = reliability;
    PipelineResult result = run_pipeline(ds, config);
    NaiveResult naive = naive_pipelines(ds, reliability);

    REQUIRE(result.dm_weights.sigma.size() == naive.sigma.size());
    for (std::size_t k = 0; k < naive.sigma.size(); ++k) {
      CHECK(result.dm_weights.sigma[k] == doctest::Approx(naive.sigma[k]).epsilon(1e-12));
    }
    for (std::size_t j = 0; j < ds.criterion_count(); ++j) {
      CHECK(result.weights.svns[j].truth ==
            doctest::Approx(naive.criteria_svns[j][0]).epsilon(1e-12));
      CHECK(result.weights.alpha[j] == result.weights.svns[j].truth);
    }
    const RankingResult& svns = result.ranking(Approach::svns);
    const RankingResult& ivfs = result.ranking(Approach::ivfs);
    for (std::size_t i = 0; i < ds.supplier_count(); ++i) {
      // The reference memberships come from quadrature, so the comparison
      // tolerance is the quadrature accuracy, not machine precision.
      CHECK(svns.scores[i].cc == doctest::Approx(naive.svns_cc[i]).epsilon(1e-6));
      CHECK(ivfs.scores[i].cc == doctest::Approx(naive.ivfs_cc[i]).epsilon(1e-6));
      CHECK(svns.scores[i].cc >= 0.0);
      CHECK(svns.scores[i].cc <= 1.0);
      CHECK(ivfs.scores[i].cc >= 0.0);
      CHECK(ivfs.scores[i].cc <= 1.0);
    }
  }
}

TEST_CASE("reliability toggle only changes the later stages") {
  DecisionDataset ds = small_mixed_dataset();
  RunConfig on;
  RunConfig off;
  off.reliability = false;
  PipelineResult with = run_pipeline(ds, on);
  PipelineResult without = run_pipeline(ds, off);

  REQUIRE(with.numeric.size() == without.numeric.size());
  for (std::size_t f = 0; f < with.numeric.size(); ++f) {
    CHECK(with.numeric[f].frame.lo == without.numeric[f].frame.lo);
    CHECK(with.numeric[f].frame.hi == without.numeric[f].frame.hi);
    CHECK(with.numeric[f].frame.class_count == without.numeric[f].frame.class_count);
    CHECK(with.numeric[f].ranges == without.numeric[f].ranges);
    CHECK(with.numeric[f].memberships == without.numeric[f].memberships);
    // The scale factor cancels in the normalized class weights.
    for (std::size_t i = 0; i < with.numeric[f].class_weights.size(); ++i) {
      for (std::size_t l = 0; l < with.numeric[f].class_weights[i].size(); ++l) {
        CHECK(with.numeric[f].class_weights[i][l] ==
              doctest::Approx(without.numeric[f].class_weights[i][l]).epsilon(1e-12));
      }
    }
    // Profiles are computed either way; only the applied factor changes.
    CHECK(with.numeric[f].profile.r_normalized == without.numeric[f].profile.r_normalized);
    CHECK(without.numeric[f].applied_reliability == 1.0);
  }
  CHECK(with.dm_weights.sigma == without.dm_weights.sigma);

  // The class weights sum to one in both configurations.
  for (const auto& artifacts : with.numeric) {
    for (const auto& weights : artifacts.class_weights) {
      double sum = 0.0;
      for (double w : weights) sum += w;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("pipeline errors carry the failing stage") {
  // One supplier: ranking is degenerate.
  GenOptions options;
  options.seed = 77;
  options.suppliers = 1;
  options.decision_makers = 3;
  DecisionDataset solo = generate_dataset(options);
  RunConfig config;
  try {
    run_pipeline(solo, config);
    FAIL("expected a pipeline error");
  } catch (const PipelineError& e) {
    CHECK(e.stage() == "ranking");
  }

  // Identical assessments on a numerical criterion: the frame is degenerate.
  DecisionDataset flat = small_mixed_dataset();
  for (auto& row : flat.numeric_values[0]) {
    for (double& v : row) v = 12.0;
  }
  try {
    run_pipeline(flat, config);
    FAIL("expected a pipeline error");
  } catch (const PipelineError& e) {
    CHECK(e.stage() == "fuzzification");
    CHECK(std::string(e.what()).find("C1") != std::string::npos);
  }
}

TEST_CASE("classical-only runs skip the fuzzification stages") {
  // A constant numerical column is fatal for the fuzzy approaches (the frame
  // degenerates) but legal for the crisp baseline.
  DecisionDataset flat = small_mixed_dataset();
  for (auto& row : flat.numeric_values[0]) {
    for (double& v : row) v = 12.0;
  }
  RunConfig config;
  config.approaches = {Approach::classical};
  PipelineResult result = run_pipeline(flat, config);
  CHECK(result.numeric.empty());
  CHECK(result.ranking(Approach::classical).scores.size() == flat.supplier_count());
}

TEST_CASE("weight overrides are validated") {
  DecisionDataset ds = small_mixed_dataset();
  RunConfig config;
  config.approaches = {Approach::svns};
  config.weight_override = WeightOverride{99, 0.5};
  CHECK_THROWS_AS(run_pipeline(ds, config), DomainError);
  config.weight_override = WeightOverride{0, 1.0};
  CHECK_THROWS_AS(run_pipeline(ds, config), DomainError);
  config.weight_override = WeightOverride{0, 0.0};
  CHECK_THROWS_AS(run_pipeline(ds, config), DomainError);
}

TEST_CASE("rescaling a numerical criterion does not move the rankings") {
  DecisionDataset ds = small_mixed_dataset();
  RunConfig config;
  PipelineResult base = run_pipeline(ds, config);

  DecisionDataset scaled = ds;
  const double p = 3.7, q = 11.0;
  std::size_t target = ds.criterion_index("C3");
  for (auto& row : scaled.numeric_values[target]) {
    for (double& v : row) v = p * v + q;
  }
  PipelineResult moved = run_pipeline(scaled, config);

  for (std::size_t f = 0; f < base.numeric.size(); ++f) {
    for (std::size_t i = 0; i < ds.supplier_count(); ++i) {
      for (std::size_t l = 0; l < base.numeric[f].memberships[i].size(); ++l) {
        CHECK(moved.numeric[f].memberships[i][l] ==
              doctest::Approx(base.numeric[f].memberships[i][l]).epsilon(1e-9));
      }
    }
  }
  for (Approach approach : {Approach::svns, Approach::ivfs}) {
    const auto& before = base.ranking(approach);
    const auto& after = moved.ranking(approach);
    for (std::size_t i = 0; i < ds.supplier_count(); ++i) {
      CHECK(before.scores[i].rank == after.scores[i].rank);
      CHECK(before.scores[i].cc == doctest::Approx(after.scores[i].cc).epsilon(1e-9));
    }
  }
}

TEST_CASE("classical baseline") {
  DecisionDataset ds = small_mixed_dataset();
  RunConfig config;
  config.approaches = {Approach::classical};
  PipelineResult result = run_pipeline(ds, config);
  const RankingResult& ranking = result.ranking(Approach::classical);
  REQUIRE(ranking.scores.size() == ds.supplier_count());
  for (const auto& score : ranking.scores) {
    CHECK(score.cc >= 0.0);
    CHECK(score.cc <= 1.0);
  }

  // Unanimous top grades map to the crisp value 9.
  ClassicalModel model = classical_model(ds);
  std::size_t j = ds.criterion_index("C4");
  DecisionDataset top = ds;
  for (auto& row : top.linguistic_values[j]) {
    for (auto& term : row) term = PerformanceTerm::EG;
  }
  ClassicalModel top_model = classical_model(top);
  for (std::size_t i = 0; i < ds.supplier_count(); ++i) {
    CHECK(top_model.matrix[i][j] == doctest::Approx(9.0).epsilon(1e-12));
  }
  CHECK(model.entropy_weights.size() == ds.criterion_count());
  double weight_sum = 0.0;
  for (double w : model.entropy_weights) weight_sum += w;
  CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("frame bounds overrides clamp out-of-frame values") {
  DecisionDataset ds = small_mixed_dataset();
  RunConfig config;
  config.approaches = {Approach::svns};
  config.frame_bounds["C1"] = RangeValue{5.0, 20.0};
  PipelineResult result = run_pipeline(ds, config);
  for (const auto& artifacts : result.numeric) {
    if (artifacts.criterion_index == ds.criterion_index("C1")) {
      CHECK(artifacts.frame.lo == 5.0);
      CHECK(artifacts.frame.hi == 20.0);
      for (const auto& range : artifacts.ranges) {
        CHECK(range.lo >= 5.0);
        CHECK(range.hi <= 20.0);
      }
    }
  }
}
