#include "sofl/discrete.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sofl/candidates.h"
#include "sofl/error.h"
#include "sofl/solver.h"

namespace sofl {

namespace {

constexpr double kSumTie = 1e-9;

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool separated(Point a, Point b, double lambda, const Tolerance& tol) {
  return centers_separated({a.x, a.y}, {b.x, b.y}, lambda, tol);
}

// True when q lies strictly inside the circle through a, b, c (outside the
// boundary band).
bool strictly_in_circumcircle(Point q, Point a, Point b, Point c, const Tolerance& tol) {
  const double d = 2.0 * cross(a, b, c);
  if (d == 0.0) return false;
  const double bx = b.x - a.x;
  const double by = b.y - a.y;
  const double cx = c.x - a.x;
  const double cy = c.y - a.y;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const Point center{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
  const double r2 = squared_distance(center, a);
  return squared_distance(center, q) < r2 - tol.band(r2);
}

Center ring_center(const SiteRing& ring, int i) {
  return {ring.sites[i].x, ring.sites[i].y, -1, ring.original[i]};
}

Placement placement_of(const SiteRing& ring, std::span<const ColoredPoint> points,
                       double lambda, std::vector<int> chosen, const Tolerance& tol) {
  std::sort(chosen.begin(), chosen.end(),
            [&](int a, int b) { return ring.original[a] < ring.original[b]; });
  std::vector<Center> centers;
  for (int i : chosen) centers.push_back(ring_center(ring, i));
  return make_placement(points, lambda, std::move(centers), tol);
}

// Exhaustive search over all sets of at most k pairwise separated sites,
// scored by union weight. The first best set in lexicographic order wins.
Placement enumerate_sites(const SiteRing& ring, std::span<const ColoredPoint> points,
                          double lambda, int k, const Tolerance& tol) {
  const int s = static_cast<int>(ring.sites.size());
  std::vector<std::vector<size_t>> covered(s);
  for (int i = 0; i < s; ++i) {
    const Disk d{ring.sites[i].x, ring.sites[i].y, lambda};
    for (size_t p = 0; p < points.size(); ++p) {
      if (is_covered(points[p], d, tol)) covered[i].push_back(p);
    }
  }
  std::vector<int> count(points.size(), 0);
  std::vector<int> current;
  std::vector<int> best_set;
  double best = 0.0;
  auto score = [&] {
    double total = 0.0;
    for (size_t p = 0; p < points.size(); ++p) {
      if (count[p] > 0) total += points[p].weight;
    }
    return total;
  };
  auto dfs = [&](auto&& self, int from) -> void {
    if (!current.empty()) {
      const double v = score();
      if (weight_improves(v, best)) {
        best = v;
        best_set = current;
      }
    }
    if (static_cast<int>(current.size()) == k) return;
    for (int i = from; i < s; ++i) {
      const bool ok = std::all_of(current.begin(), current.end(), [&](int c) {
        return separated(ring.sites[c], ring.sites[i], lambda, tol);
      });
      if (!ok) continue;
      current.push_back(i);
      for (size_t p : covered[i]) ++count[p];
      self(self, i + 1);
      for (size_t p : covered[i]) --count[p];
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return placement_of(ring, points, lambda, best_set, tol);
}

class ArcDp {
 public:
  ArcDp(const SiteRing& ring, std::span<const double> w, double lambda, int k,
        const Tolerance& tol)
      : ring_(ring), w_(w), lambda_(lambda), tol_(tol),
        s_(static_cast<int>(ring.sites.size())), budget_(k - 2) {
    const size_t cells = static_cast<size_t>(s_) * s_ * s_ * budget_;
    value_.assign(cells, std::numeric_limits<double>::quiet_NaN());
    choice_.assign(cells, -1);
  }

  // Best extra weight from at most `K` sites strictly inside the clockwise
  // arc from a to b, given the triangle (a, b, opp) on the other side of
  // the chord.
  double gamma(int a, int b, int opp, int K) {
    if (K == 0) return 0.0;
    const size_t key = index(a, b, opp, K);
    if (!std::isnan(value_[key])) return value_[key];
    double best = 0.0;
    int pick = -1;
    const Point pa = ring_.sites[a];
    const Point pb = ring_.sites[b];
    const Point po = ring_.sites[opp];
    for (int l = next(a); l != b; l = next(l)) {
      const Point pl = ring_.sites[l];
      if (zeta(pl, pa, pb, po) < 2.0 * lambda_ - separation_slack(lambda_, tol_)) continue;
      if (strictly_in_circumcircle(pl, pa, pb, po, tol_)) continue;
      for (int left = 0; left < K; ++left) {
        const double v = w_[l] + gamma(a, l, b, left) + gamma(l, b, a, K - 1 - left);
        if (v > best) {
          best = v;
          pick = l * budget_ + left;
        }
      }
    }
    value_[key] = best;
    choice_[key] = pick;
    return best;
  }

  void collect(int a, int b, int opp, int K, std::vector<int>& out) {
    if (K == 0) return;
    gamma(a, b, opp, K);
    const int pick = choice_[index(a, b, opp, K)];
    if (pick < 0) return;
    const int l = pick / budget_;
    const int left = pick % budget_;
    out.push_back(l);
    collect(a, l, b, left, out);
    collect(l, b, a, K - 1 - left, out);
  }

  int next(int i) const { return (i + 1) % s_; }

 private:
  size_t index(int a, int b, int opp, int K) const {
    return ((static_cast<size_t>(a) * s_ + b) * s_ + opp) * budget_ + K;
  }

  const SiteRing& ring_;
  std::span<const double> w_;
  double lambda_;
  Tolerance tol_;
  int s_;
  int budget_;  // K ranges over 0..k-3
  std::vector<double> value_;
  std::vector<int> choice_;
};

Placement fixed_radius_on_ring(const SiteRing& ring, std::span<const ColoredPoint> points,
                               double lambda, int k, const Tolerance& tol) {
  if (lambda < 0.0) throw InvalidInput("solve_discrete_fixed_radius: lambda must be >= 0");
  if (k < 1) throw InvalidInput("solve_discrete_fixed_radius: k must be >= 1");
  if (lambda == 0.0) return make_placement(points, 0.0, {}, tol);
  const int s = static_cast<int>(ring.sites.size());
  if (k <= 2 || s < 3) return enumerate_sites(ring, points, lambda, k, tol);

  const auto w = site_weights(ring.sites, points, lambda, tol);
  double best = 0.0;
  std::vector<int> chosen;
  for (int i = 0; i < s; ++i) {
    if (w[i] > best) {
      best = w[i];
      chosen = {i};
    }
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      if (w[i] + w[j] > best && separated(ring.sites[i], ring.sites[j], lambda, tol)) {
        best = w[i] + w[j];
        chosen = {i, j};
      }
    }
  }
  if (auto dp = arc_dp(ring, w, lambda, k, tol); dp && dp->value > best) {
    best = dp->value;
    chosen = dp->chosen;
  }

  Placement out = placement_of(ring, points, lambda, chosen, tol);
  const bool sums_match =
      std::abs(out.total_weight - best) <= kSumTie * std::max(1.0, std::abs(best));
  if (!pairwise_feasible(out.centers, lambda, tol) || !sums_match) {
    return enumerate_sites(ring, points, lambda, k, tol);
  }
  return out;
}

}  // namespace

SiteRing canonicalize_sites(std::span<const Point> sites) {
  const size_t s = sites.size();
  if (s == 0) throw InvalidInput("sites: at least one site is required");
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = i + 1; j < s; ++j) {
      if (sites[i] == sites[j]) throw InvalidInput("sites: duplicate site");
    }
  }
  SiteRing ring;
  std::vector<int> order(s);
  std::iota(order.begin(), order.end(), 0);
  if (s >= 3) {
    double cx = 0.0;
    double cy = 0.0;
    for (const Point& p : sites) {
      cx += p.x;
      cy += p.y;
    }
    cx /= static_cast<double>(s);
    cy /= static_cast<double>(s);
    std::vector<double> angle(s);
    for (size_t i = 0; i < s; ++i) angle[i] = std::atan2(sites[i].y - cy, sites[i].x - cx);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return angle[a] > angle[b]; });
    std::rotate(order.begin(), std::find(order.begin(), order.end(), 0), order.end());

    double extent = 0.0;
    for (const Point& p : sites) {
      extent = std::max({extent, std::abs(p.x - cx), std::abs(p.y - cy)});
    }
    const double flat = 1e-12 * std::max(1.0, extent * extent);
    for (size_t i = 0; i < s; ++i) {
      const Point a = sites[order[i]];
      const Point b = sites[order[(i + 1) % s]];
      const Point c = sites[order[(i + 2) % s]];
      if (!(cross(a, b, c) < -flat)) {
        throw InvalidInput("sites: not in strictly convex position");
      }
    }
  }
  for (int i : order) {
    ring.sites.push_back(sites[i]);
    ring.original.push_back(i);
  }
  return ring;
}

std::vector<double> site_weights(std::span<const Point> sites,
                                 std::span<const ColoredPoint> points,
                                 double lambda, const Tolerance& tol) {
  std::vector<double> w;
  w.reserve(sites.size());
  for (const Point& f : sites) w.push_back(disk_weight({f.x, f.y, lambda}, points, tol));
  return w;
}

double zeta(Point candidate, Point a, Point b, Point c) {
  return std::sqrt(std::min({squared_distance(candidate, a), squared_distance(candidate, b),
                             squared_distance(candidate, c)}));
}

std::optional<ArcDpResult> arc_dp(const SiteRing& ring, std::span<const double> w,
                                  double lambda, int k, const Tolerance& tol) {
  const int s = static_cast<int>(ring.sites.size());
  if (k < 3 || s < 3) return std::nullopt;
  ArcDp dp(ring, w, lambda, k, tol);
  std::optional<ArcDpResult> best;
  int bi = -1;
  int bl = -1;
  int bj = -1;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (j == i || dp.next(i) == j) continue;
      if (!separated(ring.sites[i], ring.sites[j], lambda, tol)) continue;
      // Ear triangle (i, l, j): nothing chosen strictly between i and l or
      // l and j; the remaining sites come from the clockwise arc j -> i.
      for (int l = dp.next(i); l != j; l = dp.next(l)) {
        if (!separated(ring.sites[i], ring.sites[l], lambda, tol) ||
            !separated(ring.sites[l], ring.sites[j], lambda, tol)) {
          continue;
        }
        const double v = w[i] + w[l] + w[j] + dp.gamma(j, i, l, k - 3);
        if (!best || v > best->value) {
          best = ArcDpResult{v, {}};
          bi = i;
          bl = l;
          bj = j;
        }
      }
    }
  }
  if (best) {
    best->chosen = {bi, bl, bj};
    dp.collect(bj, bi, bl, k - 3, best->chosen);
    std::sort(best->chosen.begin(), best->chosen.end());
  }
  return best;
}

Placement solve_discrete_fixed_radius(std::span<const Point> sites,
                                      std::span<const ColoredPoint> points,
                                      double lambda, int k, const Tolerance& tol) {
  return fixed_radius_on_ring(canonicalize_sites(sites), points, lambda, k, tol);
}

Placement solve_discrete(std::span<const Point> sites,
                         std::span<const ColoredPoint> points, int k,
                         const Tolerance& tol, int jobs) {
  if (k < 1) throw InvalidInput("solve_discrete: k must be >= 1");
  const SiteRing ring = canonicalize_sites(sites);
  const auto lambdas = distinct_lambdas(candidate_radii_discrete(points, sites, tol));
  return solve_over_radii(
      lambdas,
      [&](double lambda) { return fixed_radius_on_ring(ring, points, lambda, k, tol); },
      jobs);
}

}  // namespace sofl
