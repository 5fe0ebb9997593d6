#ifndef SOFL_PLACEMENT_H_
#define SOFL_PLACEMENT_H_

#include <span>
#include <vector>

#include "sofl/geom.h"

namespace sofl {

// One disk center. `line` is the index of the carrying line for the line
// variants, `site` the facility index for the discrete variant; the unused
// one is -1.
struct Center {
  double x = 0.0;
  double y = 0.0;
  int line = -1;
  int site = -1;
};

// A solution: common radius, at most k centers, and the union coverage.
struct Placement {
  double lambda = 0.0;
  std::vector<Center> centers;
  double total_weight = 0.0;
  std::vector<int> covered_blue;  // point ids
  std::vector<int> covered_red;   // point ids
};

// Builds a Placement with union coverage recomputed from first principles
// (each point counted once, accumulated in input order).
Placement make_placement(std::span<const ColoredPoint> points, double lambda,
                         std::vector<Center> centers,
                         const Tolerance& tol = {});

// Slack applied to the 2*lambda separation test so exactly touching disks
// are accepted.
double separation_slack(double lambda, const Tolerance& tol);

bool centers_separated(const Center& a, const Center& b, double lambda,
                       const Tolerance& tol);

// True when every pair of centers is at Euclidean distance >= 2*lambda.
bool pairwise_feasible(std::span<const Center> centers, double lambda,
                       const Tolerance& tol = {});

// Weight ties: two totals within this relative band are considered equal, so
// the selection across radii falls through to the smaller radius.
bool weight_improves(double candidate, double incumbent);

}  // namespace sofl

#endif  // SOFL_PLACEMENT_H_
