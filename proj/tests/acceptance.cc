// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed
// here and never loosened per run.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "sofl/candidates.h"
#include "sofl/discrete.h"
#include "sofl/driver.h"
#include "sofl/io.h"
#include "sofl/klink.h"
#include "sofl/multiline.h"
#include "sofl/oracle.h"
#include "sofl/solver.h"
#include "sofl/variants_k1.h"
#include "support.h"

namespace {

using namespace sofl;
using Clock = std::chrono::steady_clock;

constexpr double kWeightRel = 1e-9;       // solver vs oracle weights and radii
constexpr double kMongeSlack = 1e-9;      // relative, on the right-hand side
constexpr double kSweepWeightAbs = 1e-6;  // sweep may not beat the optimum by more
constexpr double kSweepRadiusAbs = 1e-6;  // sweep optimum vs nearest solver radius
constexpr int kSweepGrid = 10000;
constexpr double kRatioBound = 20.0;      // criterion 10
constexpr double kBudget1 = 60.0;         // seconds
constexpr double kBudget9 = 120.0;        // seconds

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool close(double a, double b) { return testing::near(a, b, kWeightRel); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. solve_csofl against brute_csofl.
Outcome criterion1() {
  const auto t0 = Clock::now();
  int bad = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    testing::Rng rng(1000 + i);
    const auto pts = rng.points(rng.integer(1, 8));
    const int k = rng.integer(1, 3);
    const Placement got = solve_csofl(pts, 0.0, k);
    const auto ref = oracle::brute_csofl(pts, 0.0, k);
    if (!close(got.total_weight, ref.weight) || got.lambda != ref.lambda) {
      if (bad++ == 0) {
        first = fmt(" first seed %d: %.12g@%.12g vs %.12g@%.12g", 1000 + i, got.total_weight,
                    got.lambda, ref.weight, ref.lambda);
      }
    }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kBudget1,
          fmt("200 instances, %d mismatches, %.2fs (budget %.0fs)", bad, secs, kBudget1) + first};
}

// 2. Concave Monge inequality over every quadruple of 100 sequences.
Outcome criterion2() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  long quads = 0;
  long violations = 0;
  for (int i = 0; i < 100; ++i) {
    testing::Rng rng(2000 + i);
    const auto pts = rng.points(rng.integer(4, 8));
    const double lambda = rng.uniform(0.5, 8.0);
    const int k = rng.integer(1, 3);
    const auto seq = build_center_sequence(influence_intervals(pts, 0.0, lambda), lambda, k);
    const auto w = weight_array(seq, pts, 0.0, lambda);
    const size_t m = seq.xs.size();
    auto e = [&](size_t a, size_t b) { return edge_weight(a, b, seq, w, lambda); };
    for (size_t a = 0; a + 2 < m; ++a) {
      for (size_t b = a + 2; b + 1 < m; ++b) {
        ++quads;
        const double lhs = e(a, b) + e(a + 1, b + 1);
        const double rhs = e(a, b + 1) + e(a + 1, b);
        if (rhs == inf) continue;
        if (lhs > rhs + kMongeSlack * std::max(1.0, std::abs(rhs))) ++violations;
      }
    }
  }
  return {violations == 0 && quads >= 10000,
          fmt("%ld quadruples over 100 (instance, lambda) pairs, %ld violations", quads, violations)};
}

// 3. Continuous radius sweep against the solver's candidate radii.
Outcome criterion3() {
  int beaten = 0;
  int unmatched = 0;
  int base_short = 0;
  double worst_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    testing::Rng rng(3000 + i);
    const auto pts = rng.points(rng.integer(1, 8));
    const int k = rng.integer(1, 2);
    const auto radii = distinct_lambdas(solver_radii_line(pts, 0.0, k));
    const Placement opt = solve_csofl_over(pts, 0.0, k, radii);
    const auto base = distinct_lambdas(candidate_radii_line(pts, 0.0));
    if (solve_csofl_over(pts, 0.0, k, base).total_weight < opt.total_weight - 1e-9) ++base_short;

    double xmin = pts[0].x, xmax = pts[0].x, ymax = 0.0;
    for (const ColoredPoint& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymax = std::max(ymax, p.y);
    }
    const double top = 2.0 * (xmax - xmin + ymax) + 1.0;
    auto value = [&](double l) { return solve_fixed_radius(pts, 0.0, l, k).total_weight; };

    double best = 0.0;
    int best_at = 0;
    std::vector<double> vals(kSweepGrid + 1);
    for (int g = 0; g <= kSweepGrid; ++g) {
      vals[g] = value(top * g / kSweepGrid);
      if (vals[g] > best + 1e-12) {
        best = vals[g];
        best_at = g;
      }
    }
    if (best > opt.total_weight + kSweepWeightAbs) ++beaten;
    worst_gap = std::max(worst_gap, best - opt.total_weight);
    if (best <= 0.0) continue;

    // The smallest radius reaching the sweep's best weight, by bisection
    // between the grid point before it and the first grid point reaching it.
    double lo = top * (best_at - 1) / kSweepGrid;
    double hi = top * best_at / kSweepGrid;
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      (value(mid) >= best - 1e-12 ? hi : lo) = mid;
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (double r : radii) nearest = std::min(nearest, std::abs(r - hi));
    if (nearest > kSweepRadiusAbs) ++unmatched;
  }
  return {beaten == 0 && unmatched == 0,
          fmt("50 instances: sweep beats optimum %d times (max gap %.3g), %d sweep radii without a "
              "candidate; base radii without chain tangencies fall short on %d",
              beaten, worst_gap, unmatched, base_short)};
}

// 4. k = 1 MaxBlue-NoRed: fast, naive and oracle agree; red_onin_test.
Outcome criterion4() {
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    testing::Rng rng(4000 + i);
    const auto pts = rng.points(rng.integer(1, 12));
    const auto naive = maxblue_nored_naive(pts);
    const auto fast = maxblue_nored_fast(pts);
    const auto brute = oracle::brute_k1_maxblue(pts);
    auto same = [](const std::optional<K1Result>& a, const std::optional<K1Result>& b) {
      return a && b ? same_k1_result(*a, *b) : !a && !b;
    };
    if (!same(naive, fast) || !same(naive, brute)) ++bad;
  }
  testing::Rng rng(4999);
  long triples = 0;
  long disagree = 0;
  long skipped = 0;
  while (triples < 100000) {
    const Point p{rng.uniform(-10, 10), rng.uniform(0.1, 10)};
    const Point q{rng.uniform(-10, 10), rng.uniform(0.1, 10)};
    const Point r{rng.uniform(-10, 10), rng.uniform(0.1, 10)};
    const auto c = center_on_line_through(p, q, 0.0);
    if (!c || p.x == r.x) {
      ++skipped;
      continue;
    }
    ++triples;
    const double d2 = squared_distance(r, {c->cx, 0.0});
    const double r2 = c->r * c->r;
    if (std::abs(d2 - r2) <= 1e-9 * std::max(1.0, r2)) continue;  // boundary: both answers true
    if (red_onin_test(p, q, r) != (d2 < r2)) ++disagree;
  }
  return {bad == 0 && disagree == 0,
          fmt("200 instances, %d mismatches; %ld triples, %ld disagreements (%ld degenerate draws "
              "skipped)",
              bad, triples, disagree, skipped)};
}

// 5. AllBlue-MinRed k = 1.
Outcome criterion5() {
  int uncovered = 0;
  int bad = 0;
  int checked = 0;
  int breaks_short = 0;
  for (int i = 0; checked < 200; ++i) {
    testing::Rng rng(5000 + i);
    const auto pts = rng.points(rng.integer(1, 10));
    if (testing::count_blue(pts) == 0) continue;
    ++checked;
    const K1Result got = allblue_minred(pts);
    for (const ColoredPoint& p : pts) {
      if (p.is_blue() && !is_covered(p, {got.center_x, 0.0, got.radius})) {
        ++uncovered;
        break;
      }
    }
    if (got.red_count != oracle::brute_k1_allblue(pts).red_count) ++bad;
    if (allblue_minred(pts, {}, AllBlueCandidates::kBreaksOnly).red_count > got.red_count) {
      ++breaks_short;
    }
  }
  return {uncovered == 0 && bad == 0,
          fmt("200 instances: %d leave blue uncovered, %d red-count mismatches; breakpoints-only "
              "candidates are suboptimal on %d (finding)",
              uncovered, bad, breaks_short)};
}

// 6. Reductions on instances where all blue can be covered.
Outcome criterion6() {
  int used = 0;
  int bad_min = 0;
  int bad_max = 0;
  for (int i = 0; used < 100; ++i) {
    testing::Rng rng(6000 + i);
    const auto pts = rng.points(rng.integer(1, 8));
    const int k = rng.integer(1, 2);
    const int blues = testing::count_blue(pts);
    if (blues == 0) continue;
    const auto ref_min = oracle::brute_special(pts, 0.0, k, Variant::kAllBlueMinRed);
    if (ref_min.blue != blues) continue;
    ++used;
    const auto a = solve_special(pts, 0.0, k, default_variant_spec(Variant::kAllBlueMinRed));
    if (!a.all_blue_covered || a.red_covered != ref_min.red) ++bad_min;
    const auto ref_max = oracle::brute_special(pts, 0.0, k, Variant::kMaxBlueNoRed);
    const auto b = solve_special(pts, 0.0, k, default_variant_spec(Variant::kMaxBlueNoRed));
    if (b.red_covered != 0 || b.blue_covered != ref_max.blue) ++bad_max;
  }
  return {bad_min == 0 && bad_max == 0,
          fmt("100 instances: %d AllBlue-MinRed and %d MaxBlue-NoRed mismatches", bad_min, bad_max)};
}

// 7. t lines: single-line equivalence, fixed-radius oracle, feasibility.
Outcome criterion7() {
  int bad_t1 = 0;
  int infeasible = 0;
  for (int i = 0; i < 100; ++i) {
    testing::Rng rng(7000 + i);
    const auto pts = rng.points(rng.integer(1, 8));
    const int k = rng.integer(1, 3);
    const std::vector<double> one{0.0};
    const Placement a = solve_tlines(pts, one, k);
    const Placement b = solve_csofl(pts, 0.0, k);
    if (!close(a.total_weight, b.total_weight) || !close(a.lambda, b.lambda)) ++bad_t1;
    if (!pairwise_feasible(a.centers, a.lambda)) ++infeasible;
  }
  int used = 0;
  int bad_fixed = 0;
  for (int i = 0; used < 100; ++i) {
    testing::Rng rng(7500 + i);
    const int t = rng.integer(1, 3);
    std::vector<double> lines;
    for (int j = 0; j < t; ++j) lines.push_back(2.5 * j + rng.uniform(0.0, 1.0));
    const auto pts = rng.points(rng.integer(1, 4), 0.35, 0.0);
    const int k = rng.integer(1, 3);
    const double lambda = rng.uniform(0.5, 2.5);
    const auto mc = multiline_centers(pts, lines, lambda, k);
    if (mc.size() > 16) continue;
    ++used;
    std::vector<Center> cands;
    for (const MultiCenter& c : mc) cands.push_back({c.x, lines[c.line], c.line, -1});
    const Placement got = solve_tlines_fixed_radius(pts, lines, lambda, k);
    if (!close(got.total_weight, oracle::brute_fixed_radius(pts, cands, lambda, k).weight)) {
      ++bad_fixed;
    }
    if (!pairwise_feasible(got.centers, lambda)) ++infeasible;
    const Placement full = solve_tlines(pts, lines, k);
    if (!pairwise_feasible(full.centers, full.lambda)) ++infeasible;
  }
  return {bad_t1 == 0 && bad_fixed == 0 && infeasible == 0,
          fmt("t=1: %d/100 mismatches; fixed radius (t<=3, <=16 centers, k<=3): %d/100 mismatches; "
              "%d infeasible outputs",
              bad_t1, bad_fixed, infeasible)};
}

// 8. Discrete convex-position sites.
Outcome criterion8() {
  int bad = 0;
  int infeasible = 0;
  for (int i = 0; i < 200; ++i) {
    testing::Rng rng(8000 + i);
    const auto sites = rng.convex_sites(rng.integer(1, 10));
    const auto pts = rng.points(rng.integer(1, 10), 0.35, 0.0);
    const int k = rng.integer(1, 4);
    const Placement got = solve_discrete(sites, pts, k);
    const auto ref = oracle::brute_discrete(sites, pts, k);
    if (!close(got.total_weight, ref.weight) || !close(got.lambda, ref.lambda)) ++bad;
    if (!pairwise_feasible(got.centers, got.lambda)) ++infeasible;
  }
  return {bad == 0 && infeasible == 0,
          fmt("200 instances (s<=10, k<=4, n<=10): %d mismatches, %d infeasible", bad, infeasible)};
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// 9. Generator determinism, canonical round trip, golden corpus.
Outcome criterion9() {
  const std::string bin = SOFL_BINARY;
  int nondeterministic = 0;
  int roundtrip = 0;
  const char* variants[] = {"csofl", "allblue-minred", "maxblue-nored", "tlines", "discrete"};
  for (const char* v : variants) {
    for (int seed = 1; seed <= 4; ++seed) {
      const std::string cmd = bin + " gen --seed " + std::to_string(seed) + " --n 9 --k 2 --variant " + v;
      const Run a = run(cmd);
      const Run b = run(cmd);
      if (a.status != 0 || a.out != b.out) ++nondeterministic;
      try {
        const io::ProblemInstance once = io::parse_instance(a.out);
        if (io::parse_instance(io::print_instance(once)) != once) ++roundtrip;
      } catch (const Error&) {
        ++roundtrip;
      }
    }
  }
  const auto t0 = Clock::now();
  int files = 0;
  int failed = 0;
  std::vector<std::filesystem::path> golden;
  for (const auto& entry : std::filesystem::directory_iterator(SOFL_GOLDEN_DIR)) {
    if (entry.path().extension() == ".txt") golden.push_back(entry.path());
  }
  std::sort(golden.begin(), golden.end());
  for (const auto& path : golden) {
    ++files;
    if (run(bin + " check --input " + path.string()).status != 0) ++failed;
  }
  const double secs = seconds_since(t0);
  return {nondeterministic == 0 && roundtrip == 0 && files == 30 && failed == 0 && secs < kBudget9,
          fmt("gen nondeterministic %d/20, round-trip failures %d/20; golden %d/%d green in %.2fs "
              "(budget %.0fs)",
              nondeterministic, roundtrip, files - failed, files, secs, kBudget9)};
}

// 10. Wall time growth of solve_csofl when n doubles at k = 2.
Outcome criterion10() {
  const int sizes[] = {20, 40, 80};
  std::vector<double> times;
  for (int n : sizes) {
    testing::Rng rng(10000 + n * 2);  // even seed: real coordinates
    const auto pts = rng.points(n);
    std::vector<double> runs;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = Clock::now();
      const Placement p = solve_csofl(pts, 0.0, 2);
      runs.push_back(seconds_since(t0));
      if (p.total_weight < 0.0) return {false, "negative weight"};
    }
    std::sort(runs.begin(), runs.end());
    times.push_back(runs[1]);
  }
  const double r1 = times[1] / times[0];
  const double r2 = times[2] / times[1];
  return {r1 <= kRatioBound && r2 <= kRatioBound,
          fmt("median times %.4fs %.4fs %.4fs; ratios %.1f %.1f (bound %.0f)", times[0], times[1],
              times[2], r1, r2, kRatioBound)};
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8,
                                               criterion9, criterion10};
  bool all = true;
  for (int i = 0; i < 10; ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %2d: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
