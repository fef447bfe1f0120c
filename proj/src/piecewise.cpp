#include "mcda/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "mcda/errors.hpp"

namespace mcda {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() < 2 || xs_.size() != ys_.size()) {
    throw DomainError("piecewise-linear function needs matching breakpoint lists of size >= 2");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1])) {
      throw DomainError("piecewise-linear breakpoints must be strictly increasing");
    }
  }
}

double PiecewiseLinear::operator()(double x) const {
  if (x < xs_.front() || x > xs_.back()) return 0.0;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.begin()) return ys_.front();
  if (it == xs_.end()) return ys_.back();
  std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  std::size_t lo = hi - 1;
  double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + t * (ys_[hi] - ys_[lo]);
}

double PiecewiseLinear::integral() const { return integral(xs_.front(), xs_.back()); }

double PiecewiseLinear::integral(double a, double b) const {
  a = std::max(a, xs_.front());
  b = std::min(b, xs_.back());
  if (b <= a) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    double lo = std::max(a, xs_[i]);
    double hi = std::min(b, xs_[i + 1]);
    if (hi <= lo) continue;
    total += 0.5 * ((*this)(lo) + (*this)(hi)) * (hi - lo);
  }
  return total;
}

double min_integral(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  double lo = std::max(f.domain_lo(), g.domain_lo());
  double hi = std::min(f.domain_hi(), g.domain_hi());
  if (hi <= lo) return 0.0;

  // Merge breakpoints of both functions inside [lo, hi].
  std::vector<double> pts;
  pts.push_back(lo);
  for (double x : f.xs())
    if (x > lo && x < hi) pts.push_back(x);
  for (double x : g.xs())
    if (x > lo && x < hi) pts.push_back(x);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i];
    double b = pts[i + 1];
    double da = f(a) - g(a);
    double db = f(b) - g(b);
    if (da * db < 0.0) {
      // Both functions are linear here, so there is a single crossing.
      double t = da / (da - db);
      double m = a + t * (b - a);
      total += 0.5 * (std::min(f(a), g(a)) + std::min(f(m), g(m))) * (m - a);
      total += 0.5 * (std::min(f(m), g(m)) + std::min(f(b), g(b))) * (b - m);
    } else {
      total += 0.5 * (std::min(f(a), g(a)) + std::min(f(b), g(b))) * (b - a);
    }
  }
  return total;
}

double jaccard_similarity(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  double overlap = min_integral(f, g);
  double denom = f.integral() + g.integral() - overlap;
  if (denom <= 0.0) return 0.0;
  return overlap / denom;
}

}  // namespace mcda
