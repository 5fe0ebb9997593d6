#ifndef SOFL_GEOM_H_
#define SOFL_GEOM_H_

#include <optional>
#include <span>

namespace sofl {

enum class Color { kBlue, kRed };

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// A demand point. Blue points carry positive weight and are covered by the
// closed disk; red points carry negative weight and are covered only by the
// open interior.
struct ColoredPoint {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  Color color = Color::kBlue;
  double weight = 1.0;

  Point pos() const { return {x, y}; }
  bool is_blue() const { return color == Color::kBlue; }
  bool is_red() const { return color == Color::kRed; }

  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

// Every squared-distance comparison in the library goes through this band.
struct Tolerance {
  enum class Mode { kRelative, kAbsolute };

  double eps = 1e-9;
  Mode mode = Mode::kRelative;

  // Half-width of the "on boundary" band for a quantity of magnitude `scale`.
  double band(double scale) const {
    if (mode == Mode::kAbsolute) return eps;
    return eps * (scale > 1.0 ? scale : 1.0);
  }
};

struct Disk {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};

enum class Location { kInside, kOnBoundary, kOutside };

inline double squared_distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Location classify(Point point, const Disk& disk, const Tolerance& tol = {});

// Blue: closed disk. Red: open interior only.
bool is_covered(const ColoredPoint& point, const Disk& disk,
                const Tolerance& tol = {});

// Sum of weights of covered points (linear scan).
double disk_weight(const Disk& disk, std::span<const ColoredPoint> points,
                   const Tolerance& tol = {});

struct LineCenter {
  double cx = 0.0;
  double r = 0.0;
};

// The center on y = line_y equidistant from p and q, and that distance.
// Empty when the perpendicular bisector of pq is parallel to the line.
// Throws DegenerateInput when p == q.
std::optional<LineCenter> center_on_line_through(Point p, Point q,
                                                 double line_y);

}  // namespace sofl

#endif  // SOFL_GEOM_H_
