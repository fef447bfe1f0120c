#include "mcda/fuzzy.hpp"

#include <string>

#include "mcda/errors.hpp"

namespace mcda {

namespace {

struct WeightRow {
  WeightTerm term;
  Svn svn;
  Ivfs ivfs;
};

struct PerformanceRow {
  PerformanceTerm term;
  Svn svn;
  Ivfs ivfs;
};

constexpr WeightRow kWeightRows[kWeightTermCount] = {
    {WeightTerm::VUI, {0.1, 0.9, 0.9}, {0.0, 0.0, 0.0, 0.15, 0.15}},
    {WeightTerm::UI, {0.35, 0.75, 0.8}, {0.0, 0.15, 0.3, 0.45, 0.55}},
    {WeightTerm::M, {0.5, 0.5, 0.5}, {0.25, 0.35, 0.5, 0.65, 0.75}},
    {WeightTerm::I, {0.75, 0.25, 0.2}, {0.45, 0.55, 0.7, 0.8, 0.95}},
    {WeightTerm::VI, {0.9, 0.1, 0.1}, {0.55, 0.75, 0.9, 0.95, 1.0}},
};

constexpr PerformanceRow kPerformanceRows[kPerformanceTermCount] = {
    {PerformanceTerm::VB, {0.2, 0.85, 0.8}, {0.0, 0.0, 0.0, 1.0, 1.5}},
    {PerformanceTerm::B, {0.3, 0.75, 0.7}, {0.0, 0.5, 1.0, 2.5, 3.5}},
    {PerformanceTerm::MB, {0.4, 0.65, 0.6}, {0.0, 1.5, 3.0, 4.5, 5.5}},
    {PerformanceTerm::M, {0.5, 0.5, 0.5}, {1.0, 2.5, 4.0, 5.5, 6.5}},
    {PerformanceTerm::MG, {0.6, 0.35, 0.4}, {2.5, 3.5, 5.0, 6.5, 7.5}},
    {PerformanceTerm::G, {0.7, 0.25, 0.3}, {4.5, 5.5, 6.0, 7.0, 8.5}},
    {PerformanceTerm::VG, {0.8, 0.15, 0.2}, {5.5, 6.5, 7.0, 8.0, 9.5}},
    {PerformanceTerm::VVG, {0.9, 0.1, 0.1}, {7.5, 8.5, 9.0, 9.5, 10.0}},
    {PerformanceTerm::EG, {1.0, 0.0, 0.0}, {8.5, 9.5, 10.0, 10.0, 10.0}},
};

constexpr std::string_view kWeightNames[kWeightTermCount] = {"VUI", "UI", "M", "I", "VI"};
constexpr std::string_view kPerformanceNames[kPerformanceTermCount] = {"VB", "B",  "MB",  "M", "MG",
                                                                       "G",  "VG", "VVG", "EG"};

}  // namespace

bool Svn::valid() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  return in_unit(truth) && in_unit(indeterminacy) && in_unit(falsity) &&
         truth + indeterminacy + falsity <= 3.0;
}

bool Ivfs::valid() const {
  return lo <= lo_inner && lo_inner <= peak && peak <= hi_inner && hi_inner <= hi;
}

Ivfs Ivfs::from_components(const std::array<double, 5>& c) {
  return Ivfs{c[0], c[1], c[2], c[3], c[4]};
}

std::string_view to_string(WeightTerm t) { return kWeightNames[static_cast<int>(t)]; }

std::string_view to_string(PerformanceTerm t) { return kPerformanceNames[static_cast<int>(t)]; }

WeightTerm parse_weight_term(std::string_view code) {
  for (int i = 0; i < kWeightTermCount; ++i) {
    if (kWeightNames[i] == code) return static_cast<WeightTerm>(i);
  }
  throw LexiconError("'" + std::string(code) + "' is not a weight term");
}

PerformanceTerm parse_performance_term(std::string_view code) {
  for (int i = 0; i < kPerformanceTermCount; ++i) {
    if (kPerformanceNames[i] == code) return static_cast<PerformanceTerm>(i);
  }
  throw LexiconError("'" + std::string(code) + "' is not a performance term");
}

Svn weight_svn(WeightTerm t) { return kWeightRows[static_cast<int>(t)].svn; }

Svn performance_svn(PerformanceTerm t) { return kPerformanceRows[static_cast<int>(t)].svn; }

Ivfs weight_ivfs(WeightTerm t) { return kWeightRows[static_cast<int>(t)].ivfs; }

Ivfs performance_ivfs(PerformanceTerm t) { return kPerformanceRows[static_cast<int>(t)].ivfs; }

Svn svn_product(const Svn& x, const Svn& y) {
  return Svn{x.truth * y.truth,
             x.indeterminacy + y.indeterminacy - x.indeterminacy * y.indeterminacy,
             x.falsity + y.falsity - x.falsity * y.falsity};
}

Ivfs ivfs_combine(const Ivfs& v, const Ivfs& u, IvfsOp op) {
  auto apply = [op](double a, double b) {
    switch (op) {
      case IvfsOp::add:
        return a + b;
      case IvfsOp::subtract:
        return a - b;
      case IvfsOp::multiply:
        return a * b;
      case IvfsOp::divide:
        if (b == 0.0) throw ComputeError("division by zero component in interval combination");
        return a / b;
    }
    throw DomainError("unknown combination operator");
  };
  // Inner components pair with inner, outer with outer.
  Ivfs out{apply(v.lo, u.lo), apply(v.lo_inner, u.lo_inner), apply(v.peak, u.peak),
           apply(v.hi_inner, u.hi_inner), apply(v.hi, u.hi)};
  if (!out.valid()) {
    throw ComputeError("interval combination produced an unordered result");
  }
  return out;
}

Ivfs ivfs_scale(const Ivfs& v, double factor) {
  if (factor < 0.0) throw DomainError("negative scale factor for interval number");
  return Ivfs{v.lo * factor, v.lo_inner * factor, v.peak * factor, v.hi_inner * factor,
              v.hi * factor};
}

}  // namespace mcda
