#include "sofl/klink.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sofl/error.h"

namespace sofl {

namespace {

constexpr double kCoincident = 1e-12;

int kind_rank(CenterKind kind) {
  switch (kind) {
    case CenterKind::kEndpoint:
      return 0;
    case CenterKind::kShift:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

std::vector<InfluenceInterval> influence_intervals(
    std::span<const ColoredPoint> points, double line_y, double lambda,
    const Tolerance& tol) {
  std::vector<InfluenceInterval> out;
  const double l2 = lambda * lambda;
  for (const ColoredPoint& p : points) {
    const double dy = p.y - line_y;
    const double dy2 = dy * dy;
    if (dy2 > l2 + tol.band(l2)) continue;
    const double h = std::sqrt(std::max(0.0, l2 - dy2));
    out.push_back({p.id, p.x - h, p.x + h, p.color});
  }
  return out;
}

CenterSequence build_center_sequence(std::span<const InfluenceInterval> intervals,
                                     double lambda, int k) {
  if (!(lambda > 0.0)) throw InvalidInput("build_center_sequence: lambda must be > 0");
  if (k < 1) throw InvalidInput("build_center_sequence: k must be >= 1");

  struct Entry {
    double x;
    CenterSource source;
  };
  std::vector<Entry> entries;
  const double span = 2.0 * k * lambda;
  if (intervals.empty()) {
    entries.push_back({0.0, {CenterKind::kSentinelS}});
    entries.push_back({span, {CenterKind::kSentinelT}});
  } else {
    double lo = intervals.front().l;
    double hi = intervals.front().r;
    for (const InfluenceInterval& iv : intervals) {
      lo = std::min(lo, iv.l);
      hi = std::max(hi, iv.r);
      for (bool right : {false, true}) {
        const double base = right ? iv.r : iv.l;
        entries.push_back({base, {CenterKind::kEndpoint, iv.point_id, right, 0}});
        for (int j = 1; j < k; ++j) {
          const double off = 2.0 * j * lambda;
          entries.push_back({base - off, {CenterKind::kShift, iv.point_id, right, -j}});
          entries.push_back({base + off, {CenterKind::kShift, iv.point_id, right, j}});
        }
      }
    }
    entries.push_back({lo - span, {CenterKind::kSentinelS}});
    entries.push_back({hi + span, {CenterKind::kSentinelT}});
  }

  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.x != b.x) return a.x < b.x;
    return kind_rank(a.source.kind) < kind_rank(b.source.kind);
  });
  CenterSequence seq;
  for (const Entry& e : entries) {
    if (!seq.xs.empty()) {
      const double prev = seq.xs.back();
      if (e.x - prev <= kCoincident * std::max(1.0, std::abs(e.x))) continue;
    }
    seq.xs.push_back(e.x);
    seq.source.push_back(e.source);
  }
  return seq;
}

std::vector<double> weight_array(const CenterSequence& seq,
                                 std::span<const ColoredPoint> points,
                                 double line_y, double lambda,
                                 const Tolerance& tol) {
  std::vector<double> w;
  w.reserve(seq.xs.size());
  for (double x : seq.xs) w.push_back(disk_weight({x, line_y, lambda}, points, tol));
  return w;
}

std::vector<std::optional<size_t>> predecessor_array(std::span<const double> xs,
                                                     double lambda,
                                                     const Tolerance& tol) {
  std::vector<std::optional<size_t>> p(xs.size());
  const double gap = 2.0 * lambda - separation_slack(lambda, tol);
  size_t q = 0;  // number of indices already known to be far enough left
  for (size_t i = 0; i < xs.size(); ++i) {
    while (q < i && xs[i] - xs[q] >= gap) ++q;
    if (q > 0) p[i] = q - 1;
  }
  return p;
}

KLinkResult max_weight_k_links(std::span<const double> w,
                               std::span<const std::optional<size_t>> p, int k,
                               DpTables* tables) {
  if (w.size() != p.size()) throw InvalidInput("max_weight_k_links: |w| != |p|");
  if (k < 1) throw InvalidInput("max_weight_k_links: k must be >= 1");
  const size_t m = w.size();
  const size_t links = static_cast<size_t>(k);

  std::vector<std::vector<double>> phi(links + 1, std::vector<double>(m, 0.0));
  for (size_t j = 1; j <= links; ++j) {
    for (size_t i = 0; i < m; ++i) {
      const double skip = i > 0 ? phi[j][i - 1] : 0.0;
      const double take = (p[i] ? phi[j - 1][*p[i]] : 0.0) + w[i];
      phi[j][i] = std::max(skip, take);
    }
  }

  KLinkResult result;
  if (m > 0) {
    result.value = phi[links][m - 1];
    size_t j = links;
    std::optional<size_t> i = m - 1;
    while (j > 0 && i) {
      const double skip = *i > 0 ? phi[j][*i - 1] : 0.0;
      if (phi[j][*i] == skip) {
        i = *i > 0 ? std::optional<size_t>(*i - 1) : std::nullopt;
        continue;
      }
      result.chosen.push_back(*i);
      i = p[*i];
      --j;
    }
    std::reverse(result.chosen.begin(), result.chosen.end());
  }
  if (tables != nullptr) {
    tables->w.assign(w.begin(), w.end());
    tables->p.assign(p.begin(), p.end());
    tables->phi = std::move(phi);
  }
  return result;
}

Placement solve_fixed_radius(std::span<const ColoredPoint> points,
                             double line_y, double lambda, int k,
                             const Tolerance& tol) {
  if (lambda < 0.0) throw InvalidInput("solve_fixed_radius: lambda must be >= 0");
  if (k < 1) throw InvalidInput("solve_fixed_radius: k must be >= 1");
  if (lambda == 0.0) return make_placement(points, 0.0, {}, tol);

  const auto intervals = influence_intervals(points, line_y, lambda, tol);
  if (intervals.empty()) return make_placement(points, lambda, {}, tol);
  const CenterSequence seq = build_center_sequence(intervals, lambda, k);
  const auto w = weight_array(seq, points, line_y, lambda, tol);
  const auto p = predecessor_array(seq.xs, lambda, tol);
  const KLinkResult best = max_weight_k_links(w, p, k);

  std::vector<Center> centers;
  for (size_t i : best.chosen) centers.push_back({seq.xs[i], line_y, 0, -1});
  return make_placement(points, lambda, std::move(centers), tol);
}

double edge_weight(size_t i, size_t j, const CenterSequence& seq,
                   std::span<const double> w, double lambda,
                   const Tolerance& tol) {
  if (!(i < j)) throw InvalidInput("edge_weight: requires i < j");
  const double gap = seq.xs[j] - seq.xs[i];
  if (gap < 2.0 * lambda - separation_slack(lambda, tol)) {
    return std::numeric_limits<double>::infinity();
  }
  return -(w[i] + w[j]);
}

}  // namespace sofl
