#ifndef SOFL_CANDIDATES_H_
#define SOFL_CANDIDATES_H_

#include <span>
#include <vector>

#include "sofl/geom.h"

namespace sofl {

// Which critical configuration produced a candidate radius.
enum class RadiusSource {
  kZero,          // nothing covered
  kSingleBlue,    // one blue point on the boundary, center below it
  kPairBlueBlue,  // two blue points on one boundary
  kPairBlueRed,   // a blue and a red point on one boundary
  kPointSite,     // discrete: a point on the boundary of a disk at a site
  kChain,         // two points pinning the ends of a chain of touching disks
};

struct CandidateRadius {
  double lambda = 0.0;
  RadiusSource source = RadiusSource::kZero;
  int first = -1;   // point id
  int second = -1;  // point id, or site index for kPointSite
  int line = -1;    // line index for the t-lines variant
  int links = 0;    // kChain: number of 2*lambda gaps between the pinned disks
};

// Radii realized by the zero / single-blue / blue-blue / blue-red
// configurations for disks centered on y = line_y. Sorted ascending, entries
// within 1e-9 merged (first provenance kept). Requires every point above the
// line; throws InvalidInput otherwise.
std::vector<CandidateRadius> candidate_radii_line(
    std::span<const ColoredPoint> points, double line_y,
    const Tolerance& tol = {});

// Radii at which a chain of `links` touching disks (1 <= links <= k-1) has
// its two end disks pinned by a point each: the first disk held from the left
// by point a, the last held from the right by point b. Red-red chains never
// pin and are skipped. Unsorted, may contain duplicates.
std::vector<CandidateRadius> chain_tangency_radii(
    std::span<const ColoredPoint> points, double line_y, int k,
    int line_index = -1);

// The radius set the single-line solver iterates: candidate_radii_line plus
// chain_tangency_radii, sorted and merged.
std::vector<CandidateRadius> solver_radii_line(
    std::span<const ColoredPoint> points, double line_y, int k,
    const Tolerance& tol = {});

// Per-line candidate radii for t lines (points may lie on either side of a
// line). One shared zero entry; per-line entries carry their line index.
std::vector<CandidateRadius> candidate_radii_tlines(
    std::span<const ColoredPoint> points, std::span<const double> lines,
    const Tolerance& tol = {});

// candidate_radii_tlines plus per-line chain radii.
std::vector<CandidateRadius> solver_radii_tlines(
    std::span<const ColoredPoint> points, std::span<const double> lines, int k,
    const Tolerance& tol = {});

// {0} together with every point-to-site distance, sorted and merged.
std::vector<CandidateRadius> candidate_radii_discrete(
    std::span<const ColoredPoint> points, std::span<const Point> sites,
    const Tolerance& tol = {});

// Distinct radius values of a candidate list, ascending.
std::vector<double> distinct_lambdas(std::span<const CandidateRadius> radii);

}  // namespace sofl

#endif  // SOFL_CANDIDATES_H_
