#include "poly.h"

#include <algorithm>
#include <cmath>

namespace sofl::internal {

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_scale(const Poly& a, double s) {
  Poly out = a;
  for (double& c : out) c *= s;
  return out;
}

double poly_eval(const Poly& a, double x) {
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

void trim(Poly& a) {
  double scale = 0.0;
  for (double c : a) scale = std::max(scale, std::abs(c));
  while (!a.empty() && std::abs(a.back()) <= 1e-14 * scale) a.pop_back();
}

Poly derivative(const Poly& a) {
  Poly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<double>(i));
  return out;
}

double bisect(const Poly& a, double lo, double hi) {
  double flo = poly_eval(a, lo);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = poly_eval(a, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots_in(Poly a, double lo, double hi) {
  trim(a);
  std::vector<double> roots;
  if (a.size() <= 1) return roots;
  if (!std::isfinite(hi)) {
    // Cauchy bound on the magnitude of every root.
    double m = 0.0;
    for (size_t i = 0; i + 1 < a.size(); ++i) m = std::max(m, std::abs(a[i] / a.back()));
    hi = std::max(lo, 1.0 + m);
  }
  if (!(lo <= hi)) return roots;
  if (a.size() == 2) {
    const double r = -a[0] / a[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  std::vector<double> knots{lo};
  for (double c : real_roots_in(derivative(a), lo, hi)) {
    if (c > knots.back()) knots.push_back(c);
  }
  if (hi > knots.back()) knots.push_back(hi);

  for (size_t i = 0; i < knots.size(); ++i) {
    if (poly_eval(a, knots[i]) == 0.0) roots.push_back(knots[i]);
  }
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    const double fa = poly_eval(a, knots[i]);
    const double fb = poly_eval(a, knots[i + 1]);
    if (fa == 0.0 || fb == 0.0) continue;
    if ((fa < 0.0) != (fb < 0.0)) roots.push_back(bisect(a, knots[i], knots[i + 1]));
  }
  // Critical points where the polynomial grazes zero (double roots).
  double scale = 0.0;
  for (double c : a) scale = std::max(scale, std::abs(c));
  for (size_t i = 1; i + 1 < knots.size(); ++i) {
    const double x = knots[i];
    const double mag = scale * std::max(1.0, std::pow(std::abs(x), a.size() - 1));
    if (std::abs(poly_eval(a, x)) <= 1e-12 * mag) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace sofl::internal
