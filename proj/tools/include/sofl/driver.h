#ifndef SOFL_DRIVER_H_
#define SOFL_DRIVER_H_

#include <string>
#include <string_view>

#include "sofl/geom.h"
#include "sofl/io.h"
#include "sofl/placement.h"

namespace sofl::io {

enum class Algorithm {
  kDp,     // the general pipeline for every variant
  kNaive,  // maxblue-nored, k = 1, candidate-disk scan
  kFast,   // maxblue-nored, k = 1, sorted bisector lists
  kFvd,    // allblue-minred, k = 1, farthest-point cells
};

Algorithm algorithm_from_name(std::string_view name);

// Solves the instance. The special variants are scored with their reduced
// weights (default deltas), so `total_weight` is the reduced objective.
// The k = 1 algorithms return an empty placement when nothing is feasible.
Placement solve_instance(const ProblemInstance& instance, Algorithm algorithm,
                         const Tolerance& tol = {}, int jobs = 1);

struct CheckReport {
  bool ok = true;
  std::string text;  // one line per comparison
};

// Optimized solvers against the brute-force oracles. Throws TooLarge when an
// oracle's size guard is exceeded.
CheckReport check_instance(const ProblemInstance& instance, const Tolerance& tol = {},
                           int jobs = 1);

}  // namespace sofl::io

#endif  // SOFL_DRIVER_H_
