#ifndef SOFL_VARIANTS_K1_H_
#define SOFL_VARIANTS_K1_H_

#include <optional>
#include <span>
#include <vector>

#include "sofl/geom.h"

namespace sofl {

// Single-disk special variants with the center on y = 0 and every point
// above the line.

// Circle centered on y = 0 through points p and q.
struct PairCircle {
  int p_id = -1;
  int q_id = -1;
  double center_x = 0.0;
  double radius = 0.0;
};

// Result of a single-disk search. Ties on the primary count are broken by
// smaller radius, then smaller center_x (both compared with a 1e-9 band).
struct K1Result {
  double center_x = 0.0;
  double radius = 0.0;
  int blue_count = 0;
  int red_count = 0;

  friend bool operator==(const K1Result&, const K1Result&) = default;
};

// True when the two results agree: equal counts, radius and center within
// 1e-9 (relative above magnitude 1).
bool same_k1_result(const K1Result& a, const K1Result& b);

// Whether r lies on or inside C_{p,q}, decided by comparing the bisector
// abscissae x_{p,q} and x_{p,r}. Throws DegenerateInput when x_p == x_r,
// where the ordering carries no information.
bool red_onin_test(Point p, Point q, Point r);

// Max blue count with no red point in the open disk. Candidate centers are
// all pairwise bisector crossings of B u R with the line and the foot of
// every blue point; each disk passes through its generating point(s).
// Empty when no such disk covers a blue point.
std::optional<K1Result> maxblue_nored_naive(std::span<const ColoredPoint> points,
                                            const Tolerance& tol = {});

// Same contract as maxblue_nored_naive, counting with sorted per-blue lists
// of bisector abscissae and binary search instead of a scan per disk.
std::optional<K1Result> maxblue_nored_fast(std::span<const ColoredPoint> points,
                                           const Tolerance& tol = {});

// Restriction of the farthest-point Voronoi diagram of the blue points to
// y = 0: owners[i] (a point id) is farthest on (xs[i-1], xs[i]), with
// xs[-1] = -inf and xs[owners.size()-1] = +inf.
struct FarthestCellBreaks {
  std::vector<double> xs;
  std::vector<int> owners;
};

FarthestCellBreaks farthest_breaks(std::span<const ColoredPoint> blue);

enum class AllBlueCandidates {
  kBreaksOnly,  // cell breakpoints alone
  kExtended,    // plus owner projections and owner/red crossings per cell
};

// Smallest red count (open interior) over disks covering every blue point.
// Throws InvalidInput without blue points.
K1Result allblue_minred(std::span<const ColoredPoint> points,
                        const Tolerance& tol = {},
                        AllBlueCandidates mode = AllBlueCandidates::kExtended);

}  // namespace sofl

#endif  // SOFL_VARIANTS_K1_H_
