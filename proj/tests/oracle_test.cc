#include "sofl/oracle.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "sofl/error.h"
#include "support.h"

namespace sofl::oracle {
namespace {

using testing::blue;
using testing::red;

std::vector<Center> on_line(std::vector<double> xs) {
  std::vector<Center> out;
  for (double x : xs) out.push_back({x, 0.0, 0, -1});
  return out;
}

TEST(BruteFixedRadius, EmptySetKeepsWeightNonNegative) {
  const auto r = brute_fixed_radius(std::vector{red(0, 0, 0.5, -3)}, on_line({0.0}), 1.0, 1);
  EXPECT_DOUBLE_EQ(r.weight, 0.0);
  EXPECT_TRUE(r.centers.empty());
}

TEST(BruteFixedRadius, SingleCenter) {
  const auto r = brute_fixed_radius(std::vector{blue(0, 0, 0.5, 5)}, on_line({0.0}), 1.0, 1);
  EXPECT_DOUBLE_EQ(r.weight, 5.0);
  EXPECT_EQ(r.blue, 1);
}

// Points sized so that the disk at x has weight {0, 5, -2, 7, 0}.
TEST(BruteFixedRadius, KLinkExample) {
  const auto pts = std::vector{blue(0, 2, 0.5, 5), red(1, 4, 0.5, -2), blue(2, 6, 0.5, 7)};
  const auto r = brute_fixed_radius(pts, on_line({0, 2, 4, 6, 8}), 1.0, 2);
  EXPECT_DOUBLE_EQ(r.weight, 12.0);
  ASSERT_EQ(r.centers.size(), 2u);
  EXPECT_DOUBLE_EQ(r.centers[0].x, 2.0);
  EXPECT_DOUBLE_EQ(r.centers[1].x, 6.0);
}

TEST(BruteFixedRadius, UnionCountsTangentBlueOnce) {
  const auto pts = std::vector{blue(0, 1, 0, 4)};
  const auto r = brute_fixed_radius(pts, on_line({0.0, 2.0}), 1.0, 2);
  EXPECT_DOUBLE_EQ(r.weight, 4.0);
}

TEST(BruteCsofl, HandExamples) {
  const auto one = brute_csofl(std::vector{blue(0, 0, 1)}, 0.0, 1);
  EXPECT_DOUBLE_EQ(one.lambda, 1.0);
  EXPECT_DOUBLE_EQ(one.weight, 1.0);
  const auto two = brute_csofl(std::vector{blue(0, 0, 1), blue(1, 4, 1)}, 0.0, 2);
  EXPECT_DOUBLE_EQ(two.lambda, 1.0);
  EXPECT_DOUBLE_EQ(two.weight, 2.0);
}

TEST(BruteCsofl, SizeGuard) {
  testing::Rng rng(3);
  EXPECT_THROW(brute_csofl(rng.points(9), 0.0, 1), TooLarge);
  EXPECT_THROW(brute_csofl(rng.points(3), 0.0, 4), TooLarge);
}

TEST(BruteSpecial, HandExamples) {
  const auto hidden = brute_special(std::vector{blue(0, 0, 2), red(1, 0, 1)}, 0.0, 1,
                                    Variant::kMaxBlueNoRed);
  EXPECT_EQ(hidden.blue, 0);
  const auto all = brute_special(std::vector{blue(0, -1, 1), blue(1, 1, 1), red(2, 0, 2)}, 0.0, 1,
                                 Variant::kAllBlueMinRed);
  EXPECT_EQ(all.blue, 2);
  EXPECT_EQ(all.red, 0);
  EXPECT_NEAR(all.lambda, std::sqrt(2.0), 1e-12);
}

TEST(BruteK1, HandExamples) {
  const auto mb = brute_k1_maxblue(std::vector{blue(0, -1, 1), blue(1, 1, 1)});
  ASSERT_TRUE(mb);
  EXPECT_EQ(mb->blue_count, 2);
  EXPECT_NEAR(mb->radius, std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(brute_k1_maxblue(std::vector{blue(0, 0, 2), red(1, 0, 1)}));

  const auto ab = brute_k1_allblue(std::vector{blue(0, -1, 1), blue(1, 1, 1), red(2, 0, 0.5)});
  EXPECT_EQ(ab.red_count, 1);
}

TEST(BruteDiscrete, HandExample) {
  const std::vector<Point> sq4 = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  const auto r = brute_discrete(sq4, std::vector{blue(0, 0, 0.5), blue(1, 4, 0.5)}, 2);
  EXPECT_DOUBLE_EQ(r.lambda, 0.5);
  EXPECT_DOUBLE_EQ(r.weight, 2.0);
}

TEST(BruteTLines, HandExample) {
  const std::vector<double> lines{0.0, 10.0};
  const auto r = brute_tlines(std::vector{blue(0, 0, 1), blue(1, 0, 9)}, lines, 2);
  EXPECT_DOUBLE_EQ(r.lambda, 1.0);
  EXPECT_DOUBLE_EQ(r.weight, 2.0);
}

}  // namespace
}  // namespace sofl::oracle
