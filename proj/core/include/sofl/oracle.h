#ifndef SOFL_ORACLE_H_
#define SOFL_ORACLE_H_

#include <optional>
#include <span>
#include <vector>

#include "sofl/geom.h"
#include "sofl/placement.h"
#include "sofl/solver.h"
#include "sofl/variants_k1.h"

namespace sofl::oracle {

// Brute-force reference solvers. They enumerate subsets directly and score
// union coverage from the geom predicates; the only shared pieces are the
// candidate radius and candidate center generators.

// Largest number of subsets (of size <= k) one enumeration may visit.
inline constexpr double kMaxSubsets = 4194304.0;  // 2^22

struct OracleResult {
  double lambda = 0.0;
  double weight = 0.0;
  std::vector<Center> centers;
  int blue = 0;
  int red = 0;
};

// Best union weight over subsets of at most k pairwise separated centers.
// Ties keep the lexicographically first subset. Throws TooLarge when the
// number of subsets exceeds kMaxSubsets.
OracleResult brute_fixed_radius(std::span<const ColoredPoint> points,
                                std::span<const Center> centers, double lambda,
                                int k, const Tolerance& tol = {});

// Single line: every solver radius, klink's center sequence at each.
// Requires n <= 8 and k <= 3.
OracleResult brute_csofl(std::span<const ColoredPoint> points, double line_y, int k,
                         const Tolerance& tol = {});

// Restricted to the given radii (ascending).
OracleResult brute_csofl_over(std::span<const ColoredPoint> points, double line_y,
                              int k, std::span<const double> lambdas,
                              const Tolerance& tol = {});

// Special variants scored by counts rather than weights. AllBlueMinRed:
// most blue, then fewest red. MaxBlueNoRed: no red, then most blue. Then the
// smallest radius. Weights of `points` are ignored. n <= 8, k <= 3.
OracleResult brute_special(std::span<const ColoredPoint> points, double line_y,
                           int k, Variant variant, const Tolerance& tol = {});

// Single disk on y = 0, over every blue-blue and blue-red pair circle and
// every blue foot. n <= 12.
std::optional<K1Result> brute_k1_maxblue(std::span<const ColoredPoint> points,
                                         const Tolerance& tol = {});
K1Result brute_k1_allblue(std::span<const ColoredPoint> points,
                          const Tolerance& tol = {});

// Every discrete candidate radius, all site subsets. s <= 10.
OracleResult brute_discrete(std::span<const Point> sites,
                            std::span<const ColoredPoint> points, int k,
                            const Tolerance& tol = {});

// Every t-lines solver radius, subsets of multiline_centers at each.
OracleResult brute_tlines(std::span<const ColoredPoint> points,
                          std::span<const double> lines, int k,
                          const Tolerance& tol = {});

}  // namespace sofl::oracle

#endif  // SOFL_ORACLE_H_
