#include "sofl/placement.h"

#include <algorithm>
#include <cmath>

namespace sofl {

namespace {
constexpr double kWeightTie = 1e-9;
}  // namespace

Placement make_placement(std::span<const ColoredPoint> points, double lambda,
                         std::vector<Center> centers, const Tolerance& tol) {
  Placement out;
  out.lambda = lambda;
  out.centers = std::move(centers);
  for (const ColoredPoint& p : points) {
    const bool covered =
        std::any_of(out.centers.begin(), out.centers.end(), [&](const Center& c) {
          return is_covered(p, Disk{c.x, c.y, lambda}, tol);
        });
    if (!covered) continue;
    out.total_weight += p.weight;
    (p.is_blue() ? out.covered_blue : out.covered_red).push_back(p.id);
  }
  return out;
}

double separation_slack(double lambda, const Tolerance& tol) {
  return tol.band(2.0 * lambda);
}

bool centers_separated(const Center& a, const Center& b, double lambda,
                       const Tolerance& tol) {
  const double d = std::sqrt(squared_distance({a.x, a.y}, {b.x, b.y}));
  return d >= 2.0 * lambda - separation_slack(lambda, tol);
}

bool pairwise_feasible(std::span<const Center> centers, double lambda,
                       const Tolerance& tol) {
  for (size_t i = 0; i < centers.size(); ++i) {
    for (size_t j = i + 1; j < centers.size(); ++j) {
      if (!centers_separated(centers[i], centers[j], lambda, tol)) return false;
    }
  }
  return true;
}

bool weight_improves(double candidate, double incumbent) {
  const double scale = std::max({1.0, std::abs(candidate), std::abs(incumbent)});
  return candidate > incumbent + kWeightTie * scale;
}

}  // namespace sofl
