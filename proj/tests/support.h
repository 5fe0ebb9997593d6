#ifndef SOFL_TESTS_SUPPORT_H_
#define SOFL_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "sofl/geom.h"

namespace sofl::testing {

// Seeded instance source for the property tests. Odd seeds draw coordinates
// on a coarse integer grid so ties and tangencies show up often; even seeds
// draw reals rounded to 1e-3.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed), coarse_(seed % 2 == 1) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p) { return uniform(0.0, 1.0) < p; }

  double coord(double lo, double hi) {
    if (coarse_) return integer(static_cast<int>(lo), static_cast<int>(hi));
    return std::round(uniform(lo, hi) * 1000.0) / 1000.0;
  }

  // n points with y in [ymin, 10]; red with probability red_p; weights in
  // [1, 9] (integers on coarse seeds).
  std::vector<ColoredPoint> points(int n, double red_p = 0.35, double ymin = 1.0) {
    std::vector<ColoredPoint> out;
    for (int i = 0; i < n; ++i) {
      ColoredPoint p;
      p.id = i;
      p.x = coord(0.0, 10.0);
      p.y = std::max(ymin, coord(ymin, 10.0));
      p.color = coin(red_p) ? Color::kRed : Color::kBlue;
      const double mag = coarse_ ? integer(1, 9) : std::round(uniform(1.0, 9.0) * 100.0) / 100.0;
      p.weight = p.is_blue() ? mag : -mag;
      out.push_back(p);
    }
    return out;
  }

  // s sites in strictly convex position, listed counterclockwise.
  std::vector<Point> convex_sites(int s, double radius = 5.0) {
    std::vector<Point> out;
    for (int i = 0; i < s; ++i) {
      const double theta = 2.0 * std::numbers::pi * (i + uniform(0.15, 0.85)) / s;
      out.push_back({5.0 + radius * std::cos(theta), 5.0 + radius * std::sin(theta)});
    }
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  bool coarse_;
};

inline int count_blue(const std::vector<ColoredPoint>& points) {
  return static_cast<int>(
      std::count_if(points.begin(), points.end(), [](const ColoredPoint& p) { return p.is_blue(); }));
}

inline ColoredPoint blue(int id, double x, double y, double w = 1.0) {
  return {id, x, y, Color::kBlue, w};
}

inline ColoredPoint red(int id, double x, double y, double w = -1.0) {
  return {id, x, y, Color::kRed, w};
}

// Relative closeness used by every equivalence check.
inline bool near(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace sofl::testing

#endif  // SOFL_TESTS_SUPPORT_H_
