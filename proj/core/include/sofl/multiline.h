#ifndef SOFL_MULTILINE_H_
#define SOFL_MULTILINE_H_

#include <span>
#include <vector>

#include "sofl/geom.h"
#include "sofl/placement.h"

namespace sofl {

// Disks centered on any of t horizontal lines (heights strictly increasing).

struct MultiCenter {
  double x = 0.0;
  int line = 0;

  friend bool operator==(const MultiCenter&, const MultiCenter&) = default;
};

// Candidate centers for radius lambda > 0: influence-interval endpoints on
// every line, chains of up to k-1 touching hops from each endpoint (same line
// at +-2*lambda, or to a line within 2*lambda at horizontal offset
// sqrt(4*lambda^2 - dy^2)), all hops of a chain in one direction, and an
// s/t sentinel pair per line. Sorted by (x, line); per-line duplicates
// merged. With one line this is build_center_sequence.
std::vector<MultiCenter> multiline_centers(std::span<const ColoredPoint> points,
                                           std::span<const double> lines,
                                           double lambda, int k,
                                           const Tolerance& tol = {});

// Best union weight over at most k pairwise separated centers chosen from
// multiline_centers. Exact: a memoized search over x-sorted candidates whose
// state is the set of chosen centers still within 2*lambda of the frontier.
// Throws ValidationFailure if the chosen set is not pairwise separated.
Placement solve_tlines_fixed_radius(std::span<const ColoredPoint> points,
                                    std::span<const double> lines, double lambda,
                                    int k, const Tolerance& tol = {});

// Lexicographic optimum over solver_radii_tlines.
Placement solve_tlines(std::span<const ColoredPoint> points,
                       std::span<const double> lines, int k,
                       const Tolerance& tol = {}, int jobs = 1);

}  // namespace sofl

#endif  // SOFL_MULTILINE_H_
