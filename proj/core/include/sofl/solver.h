#ifndef SOFL_SOLVER_H_
#define SOFL_SOLVER_H_

#include <functional>
#include <span>
#include <vector>

#include "sofl/geom.h"
#include "sofl/placement.h"

namespace sofl {

// Runs `solve_one` for every radius (ascending) and keeps the lexicographic
// optimum: largest weight, then smallest radius. With jobs > 1 the radii are
// split across worker threads; the reduction runs afterwards in radius order,
// so the result does not depend on `jobs`.
Placement solve_over_radii(std::span<const double> lambdas,
                           const std::function<Placement(double)>& solve_one,
                           int jobs = 1);

// Single line y = line_y, general weights, at most k disks.
Placement solve_csofl(std::span<const ColoredPoint> points, double line_y,
                      int k, const Tolerance& tol = {}, int jobs = 1);

// Same objective restricted to the given radii. Used to measure what a
// smaller candidate set loses.
Placement solve_csofl_over(std::span<const ColoredPoint> points, double line_y,
                           int k, std::span<const double> lambdas,
                           const Tolerance& tol = {}, int jobs = 1);

enum class Variant { kGeneral, kAllBlueMinRed, kMaxBlueNoRed };

struct VariantSpec {
  Variant variant = Variant::kGeneral;
  double delta = 0.0;  // < 0 for kAllBlueMinRed, > 0 for kMaxBlueNoRed
};

VariantSpec default_variant_spec(Variant variant);

// Red weights become delta, blue weights -|R|*delta + 1.
std::vector<ColoredPoint> reduce_allblue_minred(std::span<const ColoredPoint> points,
                                                double delta = -1.0);

// Blue weights become delta, red weights -|B|*delta - 1.
std::vector<ColoredPoint> reduce_maxblue_nored(std::span<const ColoredPoint> points,
                                               double delta = 1.0);

struct SpecialResult {
  Placement placement;  // weights are those of the reduced instance
  int blue_covered = 0;
  int red_covered = 0;
  int blue_total = 0;
  bool all_blue_covered = false;
};

SpecialResult solve_special(std::span<const ColoredPoint> points, double line_y,
                            int k, const VariantSpec& spec,
                            const Tolerance& tol = {}, int jobs = 1);

}  // namespace sofl

#endif  // SOFL_SOLVER_H_
