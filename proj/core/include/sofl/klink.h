#ifndef SOFL_KLINK_H_
#define SOFL_KLINK_H_

#include <optional>
#include <span>
#include <vector>

#include "sofl/geom.h"
#include "sofl/placement.h"

namespace sofl {

// Fixed-radius machinery for disks centered on one horizontal line: the
// radius is fixed, candidate centers are generated from influence intervals,
// and at most k pairwise-separated centers are selected by a k-link dynamic
// program over the x-sorted centers.

// Centers on the line from which a disk of the current radius covers a point.
struct InfluenceInterval {
  int point_id = 0;
  double l = 0.0;
  double r = 0.0;
  Color color = Color::kBlue;
};

enum class CenterKind { kEndpoint, kShift, kSentinelS, kSentinelT };

struct CenterSource {
  CenterKind kind = CenterKind::kEndpoint;
  int point_id = -1;
  bool right_side = false;  // endpoint r (true) or l (false)
  int shift = 0;            // signed multiple of 2*lambda
};

struct CenterSequence {
  std::vector<double> xs;  // strictly increasing
  std::vector<CenterSource> source;
};

struct DpTables {
  std::vector<double> w;
  std::vector<std::optional<size_t>> p;
  // phi[j][i]: best weight with at most j centers chosen among 0..i.
  std::vector<std::vector<double>> phi;
};

struct KLinkResult {
  double value = 0.0;
  std::vector<size_t> chosen;  // ascending center indices
};

std::vector<InfluenceInterval> influence_intervals(
    std::span<const ColoredPoint> points, double line_y, double lambda,
    const Tolerance& tol = {});

// Endpoints, their +-2j*lambda shifts for j < k, and the s/t sentinels placed
// 2k*lambda beyond the extreme endpoints. Requires lambda > 0 and k >= 1.
CenterSequence build_center_sequence(std::span<const InfluenceInterval> intervals,
                                     double lambda, int k);

std::vector<double> weight_array(const CenterSequence& seq,
                                 std::span<const ColoredPoint> points,
                                 double line_y, double lambda,
                                 const Tolerance& tol = {});

// p[i] = the largest i' < i with xs[i] - xs[i'] >= 2*lambda (touching allowed).
std::vector<std::optional<size_t>> predecessor_array(std::span<const double> xs,
                                                     double lambda,
                                                     const Tolerance& tol = {});

// phi(i, j) = max(phi(i-1, j), phi(p[i], j-1) + w[i]) with empty prefixes and
// unused links worth 0, so the value is never negative. Among optimal
// selections the returned one is the colexicographically smallest: the
// rightmost chosen center is as far left as possible, then the next, etc.
KLinkResult max_weight_k_links(std::span<const double> w,
                               std::span<const std::optional<size_t>> p, int k,
                               DpTables* tables = nullptr);

Placement solve_fixed_radius(std::span<const ColoredPoint> points,
                             double line_y, double lambda, int k,
                             const Tolerance& tol = {});

// Weight of edge (i, j) of the k-link graph: +inf when the centers are closer
// than 2*lambda, else -(w[i] + w[j]). Only used to check the Monge property.
double edge_weight(size_t i, size_t j, const CenterSequence& seq,
                   std::span<const double> w, double lambda,
                   const Tolerance& tol = {});

}  // namespace sofl

#endif  // SOFL_KLINK_H_
