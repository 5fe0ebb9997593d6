#ifndef SOFL_SRC_POLY_H_
#define SOFL_SRC_POLY_H_

#include <vector>

namespace sofl::internal {

// Coefficients in ascending order of degree.
using Poly = std::vector<double>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, double s);
double poly_eval(const Poly& a, double x);

// Real roots of `a` inside [lo, hi], ascending. Roots are isolated between
// consecutive critical points (found recursively) and refined by bisection.
std::vector<double> real_roots_in(Poly a, double lo, double hi);

}  // namespace sofl::internal

#endif  // SOFL_SRC_POLY_H_
