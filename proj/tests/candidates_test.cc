#include "sofl/candidates.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "sofl/error.h"
#include "sofl/solver.h"
#include "support.h"

namespace sofl {
namespace {

using testing::blue;
using testing::red;

std::vector<double> lambdas_of(const std::vector<CandidateRadius>& radii) {
  std::vector<double> out;
  for (const auto& c : radii) out.push_back(c.lambda);
  return out;
}

void expect_values(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << i;
}

TEST(CandidateRadiiLine, Examples) {
  expect_values(lambdas_of(candidate_radii_line(std::vector{blue(0, 0, 1), blue(1, 2, 1)}, 0.0)),
                {0.0, 1.0, std::sqrt(2.0)});
  expect_values(lambdas_of(candidate_radii_line(std::vector{red(0, 0, 1), red(1, 5, 2)}, 0.0)),
                {0.0});
  expect_values(lambdas_of(candidate_radii_line(std::vector{blue(0, 0, 1), red(1, 1, 2)}, 0.0)),
                {0.0, 1.0, std::sqrt(5.0)});
}

TEST(CandidateRadiiLine, RejectsPointsOnOrBelowLine) {
  EXPECT_THROW(candidate_radii_line(std::vector{blue(0, 0, 0)}, 0.0), InvalidInput);
}

TEST(CandidateRadiiTLines, Examples) {
  const std::vector<double> one{0.0};
  const auto pts = std::vector{blue(0, 0, 1), blue(1, 2, 1), red(2, 1, 3)};
  expect_values(lambdas_of(candidate_radii_tlines(pts, one)),
                lambdas_of(candidate_radii_line(pts, 0.0)));

  const std::vector<double> two{0.0, 2.0};
  const auto r = candidate_radii_tlines(std::vector{blue(0, 0, 1)}, two);
  expect_values(lambdas_of(r), {0.0, 1.0, 1.0});
  EXPECT_EQ(r[1].line, 0);
  EXPECT_EQ(r[2].line, 1);

  expect_values(lambdas_of(candidate_radii_tlines(std::vector{blue(0, 0, 3), red(1, 0, 1)}, one)),
                {0.0, 3.0});
}

TEST(CandidateRadiiDiscrete, Examples) {
  expect_values(lambdas_of(candidate_radii_discrete(std::vector{blue(0, 0, 1)},
                                                    std::vector<Point>{{0, 0}})),
                {0.0, 1.0});
  expect_values(lambdas_of(candidate_radii_discrete(std::vector{blue(0, 0, 1), red(1, 3, 0)},
                                                    std::vector<Point>{{0, 0}, {4, 0}})),
                {0.0, 1.0, 3.0, std::sqrt(17.0)});
  expect_values(lambdas_of(candidate_radii_discrete(std::vector<ColoredPoint>{},
                                                    std::vector<Point>{{0, 0}})),
                {0.0});
}

TEST(CandidateRadiiLine, CountBound) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    testing::Rng rng(seed);
    const auto pts = rng.points(rng.integer(0, 10));
    const size_t b = testing::count_blue(pts);
    const size_t r = pts.size() - b;
    EXPECT_LE(candidate_radii_line(pts, 0.0).size(), 1 + b + b * (b - (b ? 1 : 0)) / 2 + b * r);
  }
}

TEST(CandidateRadiiLine, EveryRadiusHasAWitnessDisk) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    testing::Rng rng(seed);
    const auto pts = rng.points(8);
    for (const CandidateRadius& c : candidate_radii_line(pts, 0.0)) {
      if (c.lambda == 0.0) continue;
      const ColoredPoint& a = pts[c.first];
      if (c.source == RadiusSource::kSingleBlue) {
        EXPECT_TRUE(testing::near(a.y, c.lambda));
        continue;
      }
      const ColoredPoint& b = pts[c.second];
      const double cx = center_on_line_through(a.pos(), b.pos(), 0.0)->cx;
      EXPECT_TRUE(testing::near(std::hypot(cx - a.x, a.y), c.lambda, 1e-9));
      EXPECT_TRUE(testing::near(std::hypot(cx - b.x, b.y), c.lambda, 1e-9));
    }
  }
}

// Two blues either side of a heavy red: with k = 2 both blues are covered by
// two tangent disks that straddle the red, at a radius no single or pair
// configuration produces.
TEST(ChainTangencyRadii, RecoversStraddlingPair) {
  const auto pts = std::vector{blue(0, 0, 1), blue(1, 1, 1), red(2, 0.5, 1, -10)};
  const auto plain = distinct_lambdas(candidate_radii_line(pts, 0.0));
  const auto full = distinct_lambdas(solver_radii_line(pts, 0.0, 2));
  EXPECT_LT(solve_csofl_over(pts, 0.0, 2, plain).total_weight, 2.0);

  const Placement best = solve_csofl_over(pts, 0.0, 2, full);
  EXPECT_DOUBLE_EQ(best.total_weight, 2.0);
  EXPECT_NEAR(best.lambda, 1.25, 1e-9);
  ASSERT_EQ(best.centers.size(), 2u);
  EXPECT_NEAR(best.centers[1].x - best.centers[0].x, 2.5, 1e-9);
}

TEST(ChainTangencyRadii, TightChainWitness) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    testing::Rng rng(seed);
    const auto pts = rng.points(6);
    for (const CandidateRadius& c : chain_tangency_radii(pts, 0.0, 3)) {
      const ColoredPoint& a = pts[c.first];
      const ColoredPoint& b = pts[c.second];
      const double ha = std::sqrt(std::max(0.0, c.lambda * c.lambda - a.y * a.y));
      const double hb = std::sqrt(std::max(0.0, c.lambda * c.lambda - b.y * b.y));
      const double left = a.is_blue() ? a.x - ha : a.x + ha;
      const double right = b.is_blue() ? b.x + hb : b.x - hb;
      EXPECT_NEAR(right - left, 2.0 * c.links * c.lambda,
                  1e-6 * (1.0 + std::abs(b.x - a.x) + 8.0 * c.lambda));
    }
  }
}

TEST(DistinctLambdas, MergesWithinAbsoluteTolerance) {
  const std::vector<CandidateRadius> radii = {
      {0.0}, {1.0}, {1.0 + 5e-10}, {2.0}, {2.0 + 2e-9}};
  expect_values(distinct_lambdas(radii), {0.0, 1.0, 2.0, 2.0 + 2e-9});
}

}  // namespace
}  // namespace sofl
