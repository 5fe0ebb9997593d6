#include "sofl/multiline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sofl/candidates.h"
#include "sofl/error.h"
#include "sofl/klink.h"
#include "sofl/solver.h"

namespace sofl {

namespace {

constexpr double kCoincident = 1e-12;

void validate_lines(std::span<const double> lines) {
  if (lines.empty()) throw InvalidInput("multiline: no lines");
  for (size_t i = 1; i < lines.size(); ++i) {
    if (!(lines[i] > lines[i - 1])) {
      throw InvalidInput("multiline: lines must be strictly increasing");
    }
  }
}

// Memoized search over x-sorted candidates. A state is the set S of chosen
// candidates that can still conflict with (or share a tangency point with)
// a later candidate, the last element being the most recent choice.
class FixedRadiusSearch {
 public:
  FixedRadiusSearch(std::span<const ColoredPoint> points,
                    std::span<const double> lines,
                    const std::vector<MultiCenter>& cands, double lambda, int k,
                    const Tolerance& tol)
      : points_(points), lambda_(lambda), k_(k), tol_(tol) {
    for (const MultiCenter& c : cands) centers_.push_back({c.x, lines[c.line], c.line, -1});
    const size_t m = centers_.size();
    window_ = 2.0 * lambda + 2.0 * separation_slack(lambda, tol);
    w_.resize(m);
    covered_.resize(m);
    for (size_t j = 0; j < m; ++j) {
      const Disk d{centers_[j].x, centers_[j].y, lambda};
      for (size_t p = 0; p < points.size(); ++p) {
        if (is_covered(points[p], d, tol)) {
          covered_[j].push_back(p);
          w_[j] += points[p].weight;
        }
      }
    }
    window_end_.resize(m);
    for (size_t j = 0; j < m; ++j) {
      size_t e = j + 1;
      while (e < m && centers_[e].x - centers_[j].x <= window_) ++e;
      window_end_[j] = e;
    }
  }

  std::vector<Center> run() {
    const size_t m = centers_.size();
    const size_t levels = static_cast<size_t>(k_);
    const double none = -std::numeric_limits<double>::infinity();
    single_.assign(levels, std::vector<double>(m, 0.0));
    suffix_.assign(levels, std::vector<double>(m + 1, none));
    for (size_t b = 0; b < levels; ++b) {
      if (b > 0) {
        for (size_t j = m; j-- > 0;) single_[b][j] = value({j}, static_cast<int>(b));
      }
      for (size_t j = m; j-- > 0;) {
        suffix_[b][j] = std::max(suffix_[b][j + 1], w_[j] + single_[b][j]);
      }
    }

    std::vector<Center> chosen;
    const double best = std::max(0.0, suffix_[levels - 1][0]);
    if (best == 0.0) return chosen;
    std::vector<size_t> state;
    for (size_t j = 0; j < m; ++j) {
      if (w_[j] + single_[levels - 1][j] == best) {
        state = {j};
        break;
      }
    }
    chosen.push_back(centers_[state.back()]);
    for (int b = k_ - 1; b > 0; --b) {
      const double cur = value(state, b);
      if (cur == 0.0) break;
      bool moved = false;
      for (size_t j = state.back() + 1; j < m && !moved; ++j) {
        if (option(state, j, b) == cur) {
          state = extend(state, j);
          chosen.push_back(centers_[j]);
          moved = true;
        }
      }
      if (!moved) break;
    }
    return chosen;
  }

 private:
  bool feasible(const std::vector<size_t>& state, size_t j) const {
    return std::all_of(state.begin(), state.end(), [&](size_t s) {
      return centers_separated(centers_[s], centers_[j], lambda_, tol_);
    });
  }

  // Weight of points covered by both disks (a tangency point at most).
  double overlap(size_t a, size_t b) const {
    double total = 0.0;
    const auto& ca = covered_[a];
    const auto& cb = covered_[b];
    size_t i = 0;
    size_t j = 0;
    while (i < ca.size() && j < cb.size()) {
      if (ca[i] < cb[j]) {
        ++i;
      } else if (cb[j] < ca[i]) {
        ++j;
      } else {
        total += points_[ca[i]].weight;
        ++i;
        ++j;
      }
    }
    return total;
  }

  std::vector<size_t> extend(const std::vector<size_t>& state, size_t j) const {
    std::vector<size_t> next;
    for (size_t s : state) {
      if (centers_[j].x - centers_[s].x <= window_) next.push_back(s);
    }
    next.push_back(j);
    return next;
  }

  // Value of choosing j next (then continuing with b - 1 picks), or -inf.
  double option(const std::vector<size_t>& state, size_t j, int b) {
    if (j >= window_end_[state.back()]) return w_[j] + single_[b - 1][j];
    if (!feasible(state, j)) return -std::numeric_limits<double>::infinity();
    double gain = w_[j];
    for (size_t s : state) gain -= overlap(s, j);
    return gain + value(extend(state, j), b - 1);
  }

  // Best additional weight with at most b more picks after `state`.
  double value(const std::vector<size_t>& state, int b) {
    if (b == 0) return 0.0;
    auto key = std::make_pair(b, state);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const size_t last = state.back();
    const size_t end = window_end_[last];
    double best = std::max(0.0, suffix_[b - 1][end]);
    for (size_t j = last + 1; j < end; ++j) best = std::max(best, option(state, j, b));
    memo_.emplace(std::move(key), best);
    return best;
  }

  std::span<const ColoredPoint> points_;
  double lambda_;
  int k_;
  Tolerance tol_;
  double window_ = 0.0;
  std::vector<Center> centers_;
  std::vector<double> w_;
  std::vector<std::vector<size_t>> covered_;
  std::vector<size_t> window_end_;
  std::vector<std::vector<double>> single_;
  std::vector<std::vector<double>> suffix_;
  std::map<std::pair<int, std::vector<size_t>>, double> memo_;
};

}  // namespace

std::vector<MultiCenter> multiline_centers(std::span<const ColoredPoint> points,
                                           std::span<const double> lines,
                                           double lambda, int k,
                                           const Tolerance& tol) {
  validate_lines(lines);
  if (!(lambda > 0.0)) throw InvalidInput("multiline_centers: lambda must be > 0");
  if (k < 1) throw InvalidInput("multiline_centers: k must be >= 1");
  const int t = static_cast<int>(lines.size());
  const double span = 2.0 * k * lambda;

  std::vector<MultiCenter> all;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int li = 0; li < t; ++li) {
    for (const InfluenceInterval& iv : influence_intervals(points, lines[li], lambda, tol)) {
      all.push_back({iv.l, li});
      all.push_back({iv.r, li});
      lo = std::min(lo, iv.l);
      hi = std::max(hi, iv.r);
    }
  }
  if (all.empty()) {
    for (int li = 0; li < t; ++li) {
      all.push_back({0.0, li});
      all.push_back({span, li});
    }
  } else {
    const size_t seeds = all.size();
    // Offsets keep same-line hops as an exact multiple of 2*lambda so a
    // single line reproduces build_center_sequence bit for bit.
    auto chain = [&](auto&& self, double seed, double dir, int line, int same,
                     double cross, int hops) -> void {
      if (hops == k - 1) return;
      for (int l2 = 0; l2 < t; ++l2) {
        const double dy = std::abs(lines[l2] - lines[line]);
        if (dy > 2.0 * lambda) continue;
        int next_same = same;
        double next_cross = cross;
        if (l2 == line) {
          ++next_same;
        } else {
          next_cross += std::sqrt(std::max(0.0, 4.0 * lambda * lambda - dy * dy));
        }
        const double off = 2.0 * next_same * lambda + next_cross;
        all.push_back({seed + dir * off, l2});
        self(self, seed, dir, l2, next_same, next_cross, hops + 1);
      }
    };
    for (size_t i = 0; i < seeds; ++i) {
      const MultiCenter seed = all[i];
      chain(chain, seed.x, -1.0, seed.line, 0, 0.0, 0);
      chain(chain, seed.x, 1.0, seed.line, 0, 0.0, 0);
    }
    for (int li = 0; li < t; ++li) {
      all.push_back({lo - span, li});
      all.push_back({hi + span, li});
    }
  }

  std::sort(all.begin(), all.end(), [](const MultiCenter& a, const MultiCenter& b) {
    if (a.line != b.line) return a.line < b.line;
    return a.x < b.x;
  });
  std::vector<MultiCenter> out;
  for (const MultiCenter& c : all) {
    if (!out.empty() && out.back().line == c.line &&
        c.x - out.back().x <= kCoincident * std::max(1.0, std::abs(c.x))) {
      continue;
    }
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const MultiCenter& a, const MultiCenter& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.line < b.line;
  });
  return out;
}

Placement solve_tlines_fixed_radius(std::span<const ColoredPoint> points,
                                    std::span<const double> lines, double lambda,
                                    int k, const Tolerance& tol) {
  validate_lines(lines);
  if (lambda < 0.0) throw InvalidInput("solve_tlines_fixed_radius: lambda must be >= 0");
  if (k < 1) throw InvalidInput("solve_tlines_fixed_radius: k must be >= 1");
  if (lambda == 0.0) return make_placement(points, 0.0, {}, tol);

  bool any = false;
  for (double y : lines) any = any || !influence_intervals(points, y, lambda, tol).empty();
  if (!any) return make_placement(points, lambda, {}, tol);

  const auto cands = multiline_centers(points, lines, lambda, k, tol);
  FixedRadiusSearch search(points, lines, cands, lambda, k, tol);
  std::vector<Center> chosen = search.run();
  if (!pairwise_feasible(chosen, lambda, tol)) {
    throw ValidationFailure("solve_tlines_fixed_radius: chosen centers overlap");
  }
  return make_placement(points, lambda, std::move(chosen), tol);
}

Placement solve_tlines(std::span<const ColoredPoint> points,
                       std::span<const double> lines, int k, const Tolerance& tol,
                       int jobs) {
  if (k < 1) throw InvalidInput("solve_tlines: k must be >= 1");
  const auto lambdas = distinct_lambdas(solver_radii_tlines(points, lines, k, tol));
  return solve_over_radii(
      lambdas,
      [&](double lambda) { return solve_tlines_fixed_radius(points, lines, lambda, k, tol); },
      jobs);
}

}  // namespace sofl
