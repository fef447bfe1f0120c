#pragma once

#include <vector>

namespace mcda {

// Continuous piecewise-linear function over a closed interval, zero outside it.
// Breakpoints are strictly increasing.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;

  // Exact integral over the whole domain.
  double integral() const;

  // Exact integral over [a, b] (clamped to the domain).
  double integral(double a, double b) const;

  double domain_lo() const { return xs_.front(); }
  double domain_hi() const { return xs_.back(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// Exact integral of min(f, g). Both functions are nonnegative in this
// codebase, so the minimum vanishes outside the intersection of domains.
double min_integral(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Overlap area over total area: min-integral / (area(f) + area(g) - min-integral).
double jaccard_similarity(const PiecewiseLinear& f, const PiecewiseLinear& g);

}  // namespace mcda
