#include "sofl/candidates.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poly.h"
#include "sofl/error.h"

namespace sofl {

namespace {

constexpr double kMergeEps = 1e-9;

void sort_and_merge(std::vector<CandidateRadius>& radii) {
  std::stable_sort(radii.begin(), radii.end(),
                   [](const CandidateRadius& a, const CandidateRadius& b) {
                     return a.lambda < b.lambda;
                   });
  std::vector<CandidateRadius> out;
  for (const CandidateRadius& c : radii) {
    if (!out.empty() && c.lambda - out.back().lambda <= kMergeEps) continue;
    out.push_back(c);
  }
  radii = std::move(out);
}

// Single-line configurations against y = line_y, with heights measured as
// |y - line_y|. Zero-radius entries are left to the caller.
std::vector<CandidateRadius> line_configurations(
    std::span<const ColoredPoint> points, double line_y, int line_index) {
  std::vector<CandidateRadius> out;
  for (const ColoredPoint& p : points) {
    if (!p.is_blue()) continue;
    out.push_back({std::abs(p.y - line_y), RadiusSource::kSingleBlue, p.id, -1,
                   line_index, 0});
  }
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const ColoredPoint& a = points[i];
      const ColoredPoint& b = points[j];
      // Blue-blue once per unordered pair, blue-red once with blue first.
      if (!a.is_blue()) continue;
      if (b.is_blue() && j < i) continue;
      if (a.pos() == b.pos()) continue;
      const auto c = center_on_line_through(a.pos(), b.pos(), line_y);
      if (!c) continue;
      out.push_back({c->r,
                     b.is_blue() ? RadiusSource::kPairBlueBlue
                                 : RadiusSource::kPairBlueRed,
                     a.id, b.id, line_index, 0});
    }
  }
  return out;
}

double half_chord(double lambda, double height) {
  return std::sqrt(std::max(0.0, lambda * lambda - height * height));
}

}  // namespace

std::vector<CandidateRadius> candidate_radii_line(
    std::span<const ColoredPoint> points, double line_y, const Tolerance&) {
  for (const ColoredPoint& p : points) {
    if (!(p.y > line_y)) {
      throw InvalidInput("candidate_radii_line: point " + std::to_string(p.id) +
                         " is not above the line");
    }
  }
  std::vector<CandidateRadius> out{{0.0, RadiusSource::kZero}};
  auto rest = line_configurations(points, line_y, -1);
  out.insert(out.end(), rest.begin(), rest.end());
  sort_and_merge(out);
  return out;
}

std::vector<CandidateRadius> chain_tangency_radii(
    std::span<const ColoredPoint> points, double line_y, int k,
    int line_index) {
  using internal::Poly;
  std::vector<CandidateRadius> out;
  for (int links = 1; links <= k - 1; ++links) {
    const double two_m = 2.0 * links;
    for (const ColoredPoint& a : points) {
      for (const ColoredPoint& b : points) {
        if (a.id == b.id || (a.is_red() && b.is_red())) continue;
        // Left end held by a: blue needs c >= x_a - h_a, red needs
        // c >= x_a + h_a. Right end held by b symmetrically. The chain is
        // tight when  D + sb*h_b + sa*h_a = 2*links*lambda.
        const double sa = a.is_blue() ? 1.0 : -1.0;
        const double sb = b.is_blue() ? 1.0 : -1.0;
        const double d = b.x - a.x;
        const double ya = a.y - line_y;
        const double yb = b.y - line_y;
        const double ya2 = ya * ya;
        const double yb2 = yb * yb;

        // Squaring twice: with A = D - 2m*lambda and B = yb^2 - ya^2 - A^2,
        // every solution satisfies 4 A^2 (lambda^2 - yb^2) = B^2.
        const Poly alpha{d, -two_m};
        const Poly alpha2 = internal::poly_mul(alpha, alpha);
        const Poly beta = internal::poly_add(Poly{yb2 - ya2}, internal::poly_scale(alpha2, -1.0));
        const Poly lhs = internal::poly_scale(
            internal::poly_mul(alpha2, Poly{-yb2, 0.0, 1.0}), 4.0);
        const Poly poly = internal::poly_add(lhs, internal::poly_scale(internal::poly_mul(beta, beta), -1.0));

        const double lo = std::max(std::abs(ya), std::abs(yb));
        for (double lambda : internal::real_roots_in(
                 poly, lo, std::numeric_limits<double>::infinity())) {
          auto residual = [&](double l) {
            return d + sb * half_chord(l, yb) + sa * half_chord(l, ya) - two_m * l;
          };
          // Newton polish on the unsquared equation.
          for (int it = 0; it < 4; ++it) {
            const double ha = half_chord(lambda, ya);
            const double hb = half_chord(lambda, yb);
            if (ha <= 0.0 || hb <= 0.0) break;
            const double slope = sb * lambda / hb + sa * lambda / ha - two_m;
            if (slope == 0.0) break;
            const double next = lambda - residual(lambda) / slope;
            if (!(next >= lo) || std::abs(residual(next)) >= std::abs(residual(lambda))) break;
            lambda = next;
          }
          const double scale = std::abs(d) + (two_m + 2.0) * lambda + 1.0;
          if (std::abs(residual(lambda)) > 1e-7 * scale) continue;  // squaring artefact
          out.push_back({lambda, RadiusSource::kChain, a.id, b.id, line_index, links});
        }
      }
    }
  }
  return out;
}

std::vector<CandidateRadius> solver_radii_line(
    std::span<const ColoredPoint> points, double line_y, int k,
    const Tolerance& tol) {
  auto out = candidate_radii_line(points, line_y, tol);
  auto chains = chain_tangency_radii(points, line_y, k);
  out.insert(out.end(), chains.begin(), chains.end());
  sort_and_merge(out);
  return out;
}

namespace {

std::vector<CandidateRadius> tlines_radii(std::span<const ColoredPoint> points,
                                          std::span<const double> lines, int k,
                                          bool with_chains) {
  if (lines.empty()) throw InvalidInput("candidate_radii_tlines: no lines");
  for (size_t i = 1; i < lines.size(); ++i) {
    if (!(lines[i] > lines[i - 1])) {
      throw InvalidInput("candidate_radii_tlines: lines must be strictly increasing");
    }
  }
  std::vector<CandidateRadius> out{{0.0, RadiusSource::kZero}};
  for (size_t li = 0; li < lines.size(); ++li) {
    const int line_index = static_cast<int>(li);
    auto per_line = line_configurations(points, lines[li], line_index);
    if (with_chains) {
      auto chains = chain_tangency_radii(points, lines[li], k, line_index);
      per_line.insert(per_line.end(), chains.begin(), chains.end());
    }
    // A point lying on the line contributes radius 0, already present.
    std::erase_if(per_line,
                  [](const CandidateRadius& c) { return c.lambda <= kMergeEps; });
    sort_and_merge(per_line);
    out.insert(out.end(), per_line.begin(), per_line.end());
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CandidateRadius& a, const CandidateRadius& b) {
                     if (a.lambda != b.lambda) return a.lambda < b.lambda;
                     return a.line < b.line;
                   });
  return out;
}

}  // namespace

std::vector<CandidateRadius> candidate_radii_tlines(
    std::span<const ColoredPoint> points, std::span<const double> lines,
    const Tolerance&) {
  return tlines_radii(points, lines, 1, false);
}

std::vector<CandidateRadius> solver_radii_tlines(
    std::span<const ColoredPoint> points, std::span<const double> lines, int k,
    const Tolerance&) {
  return tlines_radii(points, lines, k, true);
}

std::vector<CandidateRadius> candidate_radii_discrete(
    std::span<const ColoredPoint> points, std::span<const Point> sites,
    const Tolerance&) {
  std::vector<CandidateRadius> out{{0.0, RadiusSource::kZero}};
  for (const ColoredPoint& p : points) {
    for (size_t s = 0; s < sites.size(); ++s) {
      out.push_back({std::sqrt(squared_distance(p.pos(), sites[s])),
                     RadiusSource::kPointSite, p.id, static_cast<int>(s)});
    }
  }
  sort_and_merge(out);
  return out;
}

std::vector<double> distinct_lambdas(std::span<const CandidateRadius> radii) {
  std::vector<double> values;
  values.reserve(radii.size());
  for (const CandidateRadius& c : radii) values.push_back(c.lambda);
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (!out.empty() && v - out.back() <= kMergeEps) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace sofl
