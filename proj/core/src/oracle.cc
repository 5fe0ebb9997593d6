#include "sofl/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "sofl/candidates.h"
#include "sofl/error.h"
#include "sofl/klink.h"
#include "sofl/multiline.h"

namespace sofl::oracle {

namespace {

constexpr double kTie = 1e-9;

bool close(double a, double b) {
  return std::abs(a - b) <= kTie * std::max({1.0, std::abs(a), std::abs(b)});
}

double subset_count(size_t m, int k) {
  double total = 0.0;
  double term = 1.0;  // C(m, j)
  for (int j = 0; j <= k && static_cast<size_t>(j) <= m; ++j) {
    total += term;
    term = term * static_cast<double>(m - j) / static_cast<double>(j + 1);
  }
  return total;
}

using Visit = std::function<void(const std::vector<int>& subset, const std::vector<int>& cover)>;

// Calls visit for the empty set and then every subset of at most k pairwise
// separated centers, in lexicographic order. cover[p] counts the chosen
// disks covering point p.
void for_each_subset(std::span<const ColoredPoint> points, std::span<const Center> centers,
                     double lambda, int k, const Tolerance& tol, const Visit& visit) {
  if (subset_count(centers.size(), k) > kMaxSubsets) {
    throw TooLarge("oracle: " + std::to_string(centers.size()) + " centers with k = " +
                   std::to_string(k) + " exceeds the enumeration guard");
  }
  const size_t m = centers.size();
  std::vector<std::vector<size_t>> covered(m);
  for (size_t c = 0; c < m; ++c) {
    const Disk d{centers[c].x, centers[c].y, lambda};
    for (size_t p = 0; p < points.size(); ++p) {
      if (is_covered(points[p], d, tol)) covered[c].push_back(p);
    }
  }
  std::vector<int> cover(points.size(), 0);
  std::vector<int> subset;
  auto dfs = [&](auto&& self, size_t from) -> void {
    visit(subset, cover);
    if (static_cast<int>(subset.size()) == k) return;
    for (size_t c = from; c < m; ++c) {
      bool ok = true;
      for (int s : subset) {
        const double d = std::hypot(centers[s].x - centers[c].x, centers[s].y - centers[c].y);
        if (d < 2.0 * lambda - tol.band(2.0 * lambda)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      subset.push_back(static_cast<int>(c));
      for (size_t p : covered[c]) ++cover[p];
      self(self, c + 1);
      for (size_t p : covered[c]) --cover[p];
      subset.pop_back();
    }
  };
  dfs(dfs, 0);
}

OracleResult finish(std::span<const ColoredPoint> points, double lambda,
                    std::vector<Center> centers, const Tolerance& tol) {
  OracleResult out;
  out.lambda = lambda;
  out.centers = std::move(centers);
  for (const ColoredPoint& p : points) {
    const bool hit = std::any_of(out.centers.begin(), out.centers.end(), [&](const Center& c) {
      return is_covered(p, Disk{c.x, c.y, lambda}, tol);
    });
    if (!hit) continue;
    out.weight += p.weight;
    ++(p.is_blue() ? out.blue : out.red);
  }
  return out;
}

std::vector<Center> line_centers(std::span<const ColoredPoint> points, double line_y,
                                 double lambda, int k, const Tolerance& tol) {
  std::vector<Center> centers;
  const auto intervals = influence_intervals(points, line_y, lambda, tol);
  if (intervals.empty()) return centers;
  for (double x : build_center_sequence(intervals, lambda, k).xs) {
    centers.push_back({x, line_y, 0, -1});
  }
  return centers;
}

// Keeps the first result with strictly larger weight, so equal weights
// resolve to the earliest (smallest) radius.
OracleResult best_over(std::span<const double> lambdas,
                       const std::function<OracleResult(double)>& one) {
  OracleResult best;
  bool have = false;
  for (double lambda : lambdas) {
    OracleResult r = one(lambda);
    if (!have || weight_improves(r.weight, best.weight)) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

void require_line_points(std::span<const ColoredPoint> points, const char* who) {
  for (const ColoredPoint& p : points) {
    if (!(p.y > 0.0)) {
      throw InvalidInput(std::string(who) + ": every point must lie above y = 0");
    }
  }
}

}  // namespace

OracleResult brute_fixed_radius(std::span<const ColoredPoint> points,
                                std::span<const Center> centers, double lambda,
                                int k, const Tolerance& tol) {
  double best = 0.0;
  std::vector<int> best_subset;
  for_each_subset(points, centers, lambda, k, tol,
                  [&](const std::vector<int>& subset, const std::vector<int>& cover) {
                    double total = 0.0;
                    for (size_t p = 0; p < points.size(); ++p) {
                      if (cover[p] > 0) total += points[p].weight;
                    }
                    if (weight_improves(total, best)) {
                      best = total;
                      best_subset = subset;
                    }
                  });
  std::vector<Center> chosen;
  for (int c : best_subset) chosen.push_back(centers[c]);
  return finish(points, lambda, std::move(chosen), tol);
}

OracleResult brute_csofl_over(std::span<const ColoredPoint> points, double line_y,
                              int k, std::span<const double> lambdas,
                              const Tolerance& tol) {
  return best_over(lambdas, [&](double lambda) {
    if (lambda == 0.0) return finish(points, 0.0, {}, tol);
    const auto centers = line_centers(points, line_y, lambda, k, tol);
    if (centers.empty()) return finish(points, lambda, {}, tol);
    return brute_fixed_radius(points, centers, lambda, k, tol);
  });
}

OracleResult brute_csofl(std::span<const ColoredPoint> points, double line_y, int k,
                         const Tolerance& tol) {
  if (points.size() > 8 || k > 3) throw TooLarge("brute_csofl: requires n <= 8 and k <= 3");
  const auto lambdas = distinct_lambdas(solver_radii_line(points, line_y, k, tol));
  return brute_csofl_over(points, line_y, k, lambdas, tol);
}

OracleResult brute_special(std::span<const ColoredPoint> points, double line_y, int k,
                           Variant variant, const Tolerance& tol) {
  if (variant == Variant::kGeneral) throw InvalidInput("brute_special: general variant");
  if (points.size() > 8 || k > 3) throw TooLarge("brute_special: requires n <= 8 and k <= 3");
  const bool allblue = variant == Variant::kAllBlueMinRed;
  // (blue, red) score; larger is better.
  auto better = [&](int b1, int r1, int b2, int r2) {
    if (allblue) return b1 > b2 || (b1 == b2 && r1 < r2);
    if (r1 > 0) return false;
    return r2 > 0 || b1 > b2;
  };
  OracleResult best = finish(points, 0.0, {}, tol);
  const auto lambdas = distinct_lambdas(solver_radii_line(points, line_y, k, tol));
  for (double lambda : lambdas) {
    if (lambda == 0.0) continue;
    const auto centers = line_centers(points, line_y, lambda, k, tol);
    int bb = -1;
    int br = 0;
    std::vector<int> pick;
    for_each_subset(points, centers, lambda, k, tol,
                    [&](const std::vector<int>& subset, const std::vector<int>& cover) {
                      int b = 0;
                      int r = 0;
                      for (size_t p = 0; p < points.size(); ++p) {
                        if (cover[p] > 0) ++(points[p].is_blue() ? b : r);
                      }
                      if (bb < 0 || better(b, r, bb, br)) {
                        bb = b;
                        br = r;
                        pick = subset;
                      }
                    });
    if (bb < 0 || !better(bb, br, best.blue, best.red)) continue;
    std::vector<Center> chosen;
    for (int c : pick) chosen.push_back(centers[c]);
    best = finish(points, lambda, std::move(chosen), tol);
  }
  return best;
}

std::optional<K1Result> brute_k1_maxblue(std::span<const ColoredPoint> points,
                                         const Tolerance& tol) {
  if (points.size() > 12) throw TooLarge("brute_k1_maxblue: requires n <= 12");
  require_line_points(points, "brute_k1_maxblue");
  std::optional<K1Result> best;
  auto consider = [&](double cx, double r) {
    K1Result cand{cx, r, 0, 0};
    for (const ColoredPoint& p : points) {
      if (is_covered(p, {cx, 0.0, r}, tol)) ++(p.is_blue() ? cand.blue_count : cand.red_count);
    }
    if (cand.red_count > 0 || cand.blue_count == 0) return;
    bool wins = !best;
    if (best) {
      if (cand.blue_count != best->blue_count) {
        wins = cand.blue_count > best->blue_count;
      } else if (!close(cand.radius, best->radius)) {
        wins = cand.radius < best->radius;
      } else if (!close(cand.center_x, best->center_x)) {
        wins = cand.center_x < best->center_x;
      }
    }
    if (wins) best = cand;
  };
  for (const ColoredPoint& b : points) {
    if (!b.is_blue()) continue;
    consider(b.x, b.y);
    for (const ColoredPoint& q : points) {
      if (q.id == b.id || q.pos() == b.pos()) continue;
      if (q.is_blue() && q.id < b.id) continue;
      if (auto c = center_on_line_through(b.pos(), q.pos(), 0.0)) consider(c->cx, c->r);
    }
  }
  return best;
}

K1Result brute_k1_allblue(std::span<const ColoredPoint> points, const Tolerance& tol) {
  if (points.size() > 12) throw TooLarge("brute_k1_allblue: requires n <= 12");
  require_line_points(points, "brute_k1_allblue");
  std::vector<double> xs;
  for (const ColoredPoint& b : points) {
    if (!b.is_blue()) continue;
    xs.push_back(b.x);
    for (const ColoredPoint& q : points) {
      if (q.id == b.id || q.pos() == b.pos()) continue;
      if (auto c = center_on_line_through(b.pos(), q.pos(), 0.0)) xs.push_back(c->cx);
    }
  }
  if (xs.empty()) throw InvalidInput("brute_k1_allblue: no blue points");
  std::optional<K1Result> best;
  for (double cx : xs) {
    double far2 = 0.0;
    for (const ColoredPoint& b : points) {
      if (b.is_blue()) far2 = std::max(far2, squared_distance(b.pos(), {cx, 0.0}));
    }
    K1Result cand{cx, std::sqrt(far2), 0, 0};
    for (const ColoredPoint& p : points) {
      if (is_covered(p, {cx, 0.0, cand.radius}, tol)) {
        ++(p.is_blue() ? cand.blue_count : cand.red_count);
      }
    }
    bool wins = !best;
    if (best) {
      if (cand.red_count != best->red_count) {
        wins = cand.red_count < best->red_count;
      } else if (!close(cand.radius, best->radius)) {
        wins = cand.radius < best->radius;
      } else if (!close(cand.center_x, best->center_x)) {
        wins = cand.center_x < best->center_x;
      }
    }
    if (wins) best = cand;
  }
  return *best;
}

OracleResult brute_discrete(std::span<const Point> sites,
                            std::span<const ColoredPoint> points, int k,
                            const Tolerance& tol) {
  if (sites.size() > 10) throw TooLarge("brute_discrete: requires s <= 10");
  std::vector<Center> centers;
  for (size_t i = 0; i < sites.size(); ++i) {
    centers.push_back({sites[i].x, sites[i].y, -1, static_cast<int>(i)});
  }
  const auto lambdas = distinct_lambdas(candidate_radii_discrete(points, sites, tol));
  return best_over(lambdas, [&](double lambda) {
    if (lambda == 0.0) return finish(points, 0.0, {}, tol);
    return brute_fixed_radius(points, centers, lambda, k, tol);
  });
}

OracleResult brute_tlines(std::span<const ColoredPoint> points,
                          std::span<const double> lines, int k, const Tolerance& tol) {
  const auto lambdas = distinct_lambdas(solver_radii_tlines(points, lines, k, tol));
  return best_over(lambdas, [&](double lambda) {
    if (lambda == 0.0) return finish(points, 0.0, {}, tol);
    bool any = false;
    for (double y : lines) any = any || !influence_intervals(points, y, lambda, tol).empty();
    if (!any) return finish(points, lambda, {}, tol);
    std::vector<Center> centers;
    for (const MultiCenter& c : multiline_centers(points, lines, lambda, k, tol)) {
      centers.push_back({c.x, lines[c.line], c.line, -1});
    }
    return brute_fixed_radius(points, centers, lambda, k, tol);
  });
}

}  // namespace sofl::oracle
