#include "sofl/variants_k1.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sofl/error.h"

namespace sofl {

namespace {

constexpr double kTie = 1e-9;

bool close(double a, double b) {
  return std::abs(a - b) <= kTie * std::max({1.0, std::abs(a), std::abs(b)});
}

// Max blue count, then min radius, then min center_x.
bool maxblue_better(const K1Result& a, const K1Result& b) {
  if (a.blue_count != b.blue_count) return a.blue_count > b.blue_count;
  if (!close(a.radius, b.radius)) return a.radius < b.radius;
  if (!close(a.center_x, b.center_x)) return a.center_x < b.center_x;
  return false;
}

// Min red count, then min radius, then min center_x.
bool minred_better(const K1Result& a, const K1Result& b) {
  if (a.red_count != b.red_count) return a.red_count < b.red_count;
  if (!close(a.radius, b.radius)) return a.radius < b.radius;
  if (!close(a.center_x, b.center_x)) return a.center_x < b.center_x;
  return false;
}

void require_above_line(std::span<const ColoredPoint> points, const char* who) {
  for (const ColoredPoint& p : points) {
    if (!(p.y > 0.0)) {
      throw InvalidInput(std::string(who) + ": point " + std::to_string(p.id) +
                         " is not above the line");
    }
  }
}

K1Result evaluate(std::span<const ColoredPoint> points, double cx, double r,
                  const Tolerance& tol) {
  K1Result out{cx, r, 0, 0};
  const Disk disk{cx, 0.0, r};
  for (const ColoredPoint& p : points) {
    if (!is_covered(p, disk, tol)) continue;
    ++(p.is_blue() ? out.blue_count : out.red_count);
  }
  return out;
}

void offer_maxblue(std::optional<K1Result>& best, const K1Result& cand) {
  if (cand.red_count > 0 || cand.blue_count == 0) return;
  if (!best || maxblue_better(cand, *best)) best = cand;
}

// Keys x_{p,r} for the points r on one side of p, sorted, with the smallest
// |x_r - x_p| on that side (bounds how far a key may sit from the query and
// still leave r within the boundary band).
struct SideList {
  std::vector<std::pair<double, size_t>> keys;
  double min_gap = std::numeric_limits<double>::infinity();
};

// Per blue p: the other points split by side of x_p, plus those with x_r too
// close to x_p for the ordering to be trusted.
struct BlueLists {
  SideList right;  // x_r > x_p: r on/inside C_{p,c} iff c >= x_{p,r}
  SideList left;   // x_r < x_p: r on/inside C_{p,c} iff c <= x_{p,r}
  std::vector<size_t> direct;
};

BlueLists build_lists(std::span<const ColoredPoint> points, size_t pi) {
  const ColoredPoint& p = points[pi];
  const double near = 1e-6 * std::max(1.0, std::abs(p.x));
  BlueLists lists;
  for (size_t ri = 0; ri < points.size(); ++ri) {
    if (ri == pi) continue;
    const ColoredPoint& r = points[ri];
    const double gap = r.x - p.x;
    if (std::abs(gap) <= near) {
      lists.direct.push_back(ri);
      continue;
    }
    const auto c = center_on_line_through(p.pos(), r.pos(), 0.0);
    SideList& side = gap > 0.0 ? lists.right : lists.left;
    side.keys.emplace_back(c->cx, ri);
    side.min_gap = std::min(side.min_gap, std::abs(gap));
  }
  std::sort(lists.right.keys.begin(), lists.right.keys.end());
  std::sort(lists.left.keys.begin(), lists.left.keys.end());
  return lists;
}

// Counts points of the disk centered at c through p. Keys farther than the
// band window from c are decided by their order alone; the rest, and the
// direct list, are classified from distances.
K1Result count_on_circle(std::span<const ColoredPoint> points,
                         const BlueLists& lists, double c, double r,
                         const Tolerance& tol) {
  K1Result out{c, r, 1, 0};  // p itself is blue and on the boundary
  const Disk disk{c, 0.0, r};
  auto add = [&](size_t idx, bool covered) {
    if (!covered) return;
    ++(points[idx].is_blue() ? out.blue_count : out.red_count);
  };
  const double band = tol.band(r * r);
  auto scan = [&](const SideList& side, bool right) {
    if (side.keys.empty()) return;
    const double win = band / side.min_gap + 1e-12 * std::max(1.0, std::abs(c));
    const auto lo = std::lower_bound(side.keys.begin(), side.keys.end(),
                                     std::make_pair(c - win, size_t{0}));
    const auto hi = std::upper_bound(
        side.keys.begin(), side.keys.end(),
        std::make_pair(c + win, std::numeric_limits<size_t>::max()));
    // Right side: keys below the window are inside; left side: keys above.
    auto sure_first = right ? side.keys.begin() : hi;
    auto sure_last = right ? lo : side.keys.end();
    for (auto it = sure_first; it != sure_last; ++it) {
      const ColoredPoint& q = points[it->second];
      ++(q.is_blue() ? out.blue_count : out.red_count);
    }
    for (auto it = lo; it != hi; ++it) {
      add(it->second, is_covered(points[it->second], disk, tol));
    }
  };
  scan(lists.right, true);
  scan(lists.left, false);
  for (size_t idx : lists.direct) add(idx, is_covered(points[idx], disk, tol));
  return out;
}

}  // namespace

bool same_k1_result(const K1Result& a, const K1Result& b) {
  return a.blue_count == b.blue_count && a.red_count == b.red_count &&
         close(a.radius, b.radius) && close(a.center_x, b.center_x);
}

bool red_onin_test(Point p, Point q, Point r) {
  if (p.x == r.x) throw DegenerateInput("red_onin_test: x_p == x_r");
  const auto cq = center_on_line_through(p, q, 0.0);
  if (!cq) throw InvalidInput("red_onin_test: C_{p,q} is undefined");
  const double xpr = center_on_line_through(p, r, 0.0)->cx;
  return (p.x < r.x && cq->cx >= xpr) || (p.x > r.x && cq->cx <= xpr);
}

std::optional<K1Result> maxblue_nored_naive(std::span<const ColoredPoint> points,
                                            const Tolerance& tol) {
  require_above_line(points, "maxblue_nored_naive");
  std::optional<K1Result> best;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].pos() == points[j].pos()) continue;
      const auto c = center_on_line_through(points[i].pos(), points[j].pos(), 0.0);
      if (!c) continue;
      offer_maxblue(best, evaluate(points, c->cx, c->r, tol));
    }
  }
  for (const ColoredPoint& b : points) {
    if (b.is_blue()) offer_maxblue(best, evaluate(points, b.x, b.y, tol));
  }
  return best;
}

std::optional<K1Result> maxblue_nored_fast(std::span<const ColoredPoint> points,
                                           const Tolerance& tol) {
  require_above_line(points, "maxblue_nored_fast");
  std::optional<K1Result> best;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const ColoredPoint& p = points[pi];
    if (!p.is_blue()) continue;
    const BlueLists lists = build_lists(points, pi);
    for (size_t qi = 0; qi < points.size(); ++qi) {
      if (qi == pi || points[qi].pos() == p.pos()) continue;
      const auto c = center_on_line_through(p.pos(), points[qi].pos(), 0.0);
      if (!c) continue;
      offer_maxblue(best, count_on_circle(points, lists, c->cx, c->r, tol));
    }
    // C_p, the disk centered below p, as the circle through p and an
    // auxiliary point on the line whose bisector with p crosses at x_p.
    const Point temp{p.x + p.y, 0.0};
    const auto c = center_on_line_through(p.pos(), temp, 0.0);
    offer_maxblue(best, count_on_circle(points, lists, c->cx, c->r, tol));
  }
  return best;
}

FarthestCellBreaks farthest_breaks(std::span<const ColoredPoint> blue) {
  // dist^2((c,0), b) = c^2 + (-2 x_b) c + |b|^2, so the farthest blue is the
  // upper envelope of the lines (-2 x_b) c + |b|^2.
  struct Line {
    double m;
    double c;
    int id;
  };
  std::vector<Line> lines;
  lines.reserve(blue.size());
  for (const ColoredPoint& b : blue) lines.push_back({-2.0 * b.x, b.x * b.x + b.y * b.y, b.id});
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.c > b.c;
  });
  auto meet = [](const Line& a, const Line& b) { return (b.c - a.c) / (a.m - b.m); };
  std::vector<Line> hull;
  for (const Line& l : lines) {
    if (!hull.empty() && hull.back().m == l.m) continue;
    while (hull.size() >= 2 &&
           meet(hull[hull.size() - 2], l) <= meet(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }
  FarthestCellBreaks out;
  for (size_t i = 0; i < hull.size(); ++i) {
    out.owners.push_back(hull[i].id);
    if (i + 1 < hull.size()) out.xs.push_back(meet(hull[i], hull[i + 1]));
  }
  return out;
}

K1Result allblue_minred(std::span<const ColoredPoint> points, const Tolerance& tol,
                        AllBlueCandidates mode) {
  require_above_line(points, "allblue_minred");
  std::vector<ColoredPoint> blue;
  for (const ColoredPoint& p : points) {
    if (p.is_blue()) blue.push_back(p);
  }
  if (blue.empty()) throw InvalidInput("allblue_minred: no blue points");
  const FarthestCellBreaks cells = farthest_breaks(blue);

  auto owner = [&](int id) -> const ColoredPoint& {
    return *std::find_if(blue.begin(), blue.end(),
                         [id](const ColoredPoint& b) { return b.id == id; });
  };
  std::vector<double> centers = cells.xs;
  if (mode == AllBlueCandidates::kExtended || cells.xs.empty()) {
    const double inf = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cells.owners.size(); ++i) {
      const double lo = i == 0 ? -inf : cells.xs[i - 1];
      const double hi = i + 1 == cells.owners.size() ? inf : cells.xs[i];
      const ColoredPoint& o = owner(cells.owners[i]);
      centers.push_back(std::clamp(o.x, lo, hi));
      if (mode != AllBlueCandidates::kExtended) continue;
      for (const ColoredPoint& r : points) {
        if (!r.is_red() || r.pos() == o.pos()) continue;
        const auto c = center_on_line_through(o.pos(), r.pos(), 0.0);
        if (c && c->cx >= lo && c->cx <= hi) centers.push_back(c->cx);
      }
    }
  }

  std::optional<K1Result> best;
  for (double cx : centers) {
    double far2 = 0.0;
    for (const ColoredPoint& b : blue) far2 = std::max(far2, squared_distance(b.pos(), {cx, 0.0}));
    const K1Result cand = evaluate(points, cx, std::sqrt(far2), tol);
    if (!best || minred_better(cand, *best)) best = cand;
  }
  return *best;
}

}  // namespace sofl
