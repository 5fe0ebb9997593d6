#include "sofl/geom.h"

#include <cmath>

#include "sofl/error.h"

namespace sofl {

Location classify(Point point, const Disk& disk, const Tolerance& tol) {
  const double r2 = disk.r * disk.r;
  const double s = squared_distance(point, {disk.cx, disk.cy}) - r2;
  const double band = tol.band(r2);
  if (std::abs(s) <= band) return Location::kOnBoundary;
  return s < 0.0 ? Location::kInside : Location::kOutside;
}

bool is_covered(const ColoredPoint& point, const Disk& disk,
                const Tolerance& tol) {
  const Location loc = classify(point.pos(), disk, tol);
  if (point.is_blue()) return loc != Location::kOutside;
  return loc == Location::kInside;
}

double disk_weight(const Disk& disk, std::span<const ColoredPoint> points,
                   const Tolerance& tol) {
  double total = 0.0;
  for (const ColoredPoint& p : points) {
    if (is_covered(p, disk, tol)) total += p.weight;
  }
  return total;
}

std::optional<LineCenter> center_on_line_through(Point p, Point q,
                                                 double line_y) {
  if (p == q) throw DegenerateInput("center_on_line_through: p == q");
  // Vertical pair: the bisector is horizontal and never meets the line, or
  // (mirror images across the line) coincides with it.
  if (p.x == q.x) return std::nullopt;
  const double py = p.y - line_y;
  const double qy = q.y - line_y;
  const double cx =
      ((qy - py) * (qy + py)) / (2.0 * (q.x - p.x)) + (q.x + p.x) / 2.0;
  const double dx = p.x - cx;
  return LineCenter{cx, std::sqrt(dx * dx + py * py)};
}

}  // namespace sofl
