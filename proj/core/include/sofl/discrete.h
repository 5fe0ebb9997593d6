#ifndef SOFL_DISCRETE_H_
#define SOFL_DISCRETE_H_

#include <optional>
#include <span>
#include <vector>

#include "sofl/geom.h"
#include "sofl/placement.h"

namespace sofl {

// Candidate facility sites in strictly convex position, in clockwise order.
// original[i] is the caller's index of sites[i].
struct SiteRing {
  std::vector<Point> sites;
  std::vector<int> original;
};

// Orders the sites clockwise, starting from the lowest caller index. Throws
// InvalidInput for an empty set, duplicate sites, or (three or more sites)
// any site that is not a strict hull vertex.
SiteRing canonicalize_sites(std::span<const Point> sites);

std::vector<double> site_weights(std::span<const Point> sites,
                                 std::span<const ColoredPoint> points,
                                 double lambda, const Tolerance& tol = {});

// Distance from the candidate to the nearest of the three anchors.
double zeta(Point candidate, Point a, Point b, Point c);

struct ArcDpResult {
  double value = 0.0;
  std::vector<int> chosen;  // ring indices, ascending
};

// Best sum of site weights over sets of 3..k sites with pairwise distance
// >= 2*lambda, built as a triangulation grown from an ear triangle across
// chords; each new site must clear its three anchors by 2*lambda and lie
// outside the circumcircle of the triangle across the chord. Empty when no
// feasible triangle exists or k < 3.
std::optional<ArcDpResult> arc_dp(const SiteRing& ring, std::span<const double> w,
                                  double lambda, int k, const Tolerance& tol = {});

// At most k disks at the sites. k <= 2 enumerates; larger k combines arc_dp
// with the enumeration of one- and two-site sets. The result is validated
// pairwise and its union weight compared with the DP sum; a mismatch (a blue
// point on two tangent boundaries) falls back to full enumeration.
Placement solve_discrete_fixed_radius(std::span<const Point> sites,
                                      std::span<const ColoredPoint> points,
                                      double lambda, int k,
                                      const Tolerance& tol = {});

// Lexicographic optimum over candidate_radii_discrete.
Placement solve_discrete(std::span<const Point> sites,
                         std::span<const ColoredPoint> points, int k,
                         const Tolerance& tol = {}, int jobs = 1);

}  // namespace sofl

#endif  // SOFL_DISCRETE_H_
