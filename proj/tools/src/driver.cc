#include "sofl/driver.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sofl/discrete.h"
#include "sofl/multiline.h"
#include "sofl/oracle.h"
#include "sofl/solver.h"
#include "sofl/variants_k1.h"

namespace sofl::io {

namespace {

constexpr double kTie = 1e-9;

bool close(double a, double b) {
  return std::abs(a - b) <= kTie * std::max({1.0, std::abs(a), std::abs(b)});
}

Variant special_variant(InstanceVariant v) {
  return v == InstanceVariant::kAllBlueMinRed ? Variant::kAllBlueMinRed
                                              : Variant::kMaxBlueNoRed;
}

std::vector<ColoredPoint> reduced_points(const ProblemInstance& inst) {
  if (inst.variant == InstanceVariant::kAllBlueMinRed) return reduce_allblue_minred(inst.points);
  return reduce_maxblue_nored(inst.points);
}

void require_k1(const ProblemInstance& inst, InstanceVariant variant, const char* algo) {
  if (inst.variant != variant || inst.k != 1) {
    throw InvalidInput(std::string("--algorithm ") + algo + " needs variant " +
                       std::string(variant_name(variant)) + " with k = 1");
  }
}

std::string k1_text(const std::optional<K1Result>& r) {
  if (!r) return "none";
  std::ostringstream os;
  os << "x=" << r->center_x << " r=" << r->radius << " blue=" << r->blue_count
     << " red=" << r->red_count;
  return os.str();
}

bool same_optional(const std::optional<K1Result>& a, const std::optional<K1Result>& b) {
  if (!a || !b) return !a && !b;
  return same_k1_result(*a, *b);
}

}  // namespace

Algorithm algorithm_from_name(std::string_view name) {
  if (name == "dp") return Algorithm::kDp;
  if (name == "naive") return Algorithm::kNaive;
  if (name == "fast") return Algorithm::kFast;
  if (name == "fvd") return Algorithm::kFvd;
  throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

Placement solve_instance(const ProblemInstance& inst, Algorithm algorithm,
                         const Tolerance& tol, int jobs) {
  switch (algorithm) {
    case Algorithm::kNaive:
    case Algorithm::kFast: {
      require_k1(inst, InstanceVariant::kMaxBlueNoRed,
                 algorithm == Algorithm::kNaive ? "naive" : "fast");
      const auto pts = reduced_points(inst);
      const auto r = algorithm == Algorithm::kNaive ? maxblue_nored_naive(pts, tol)
                                                    : maxblue_nored_fast(pts, tol);
      if (!r) return make_placement(pts, 0.0, {}, tol);
      return make_placement(pts, r->radius, {{r->center_x, 0.0, 0, -1}}, tol);
    }
    case Algorithm::kFvd: {
      require_k1(inst, InstanceVariant::kAllBlueMinRed, "fvd");
      const auto pts = reduced_points(inst);
      const K1Result r = allblue_minred(pts, tol);
      return make_placement(pts, r.radius, {{r.center_x, 0.0, 0, -1}}, tol);
    }
    case Algorithm::kDp:
      break;
  }
  switch (inst.variant) {
    case InstanceVariant::kCsofl:
      return solve_csofl(inst.points, 0.0, inst.k, tol, jobs);
    case InstanceVariant::kAllBlueMinRed:
    case InstanceVariant::kMaxBlueNoRed:
      return solve_special(inst.points, 0.0, inst.k,
                           default_variant_spec(special_variant(inst.variant)), tol, jobs)
          .placement;
    case InstanceVariant::kTLines:
      return solve_tlines(inst.points, inst.lines, inst.k, tol, jobs);
    case InstanceVariant::kDiscrete:
      return solve_discrete(inst.sites, inst.points, inst.k, tol, jobs);
  }
  return {};
}

CheckReport check_instance(const ProblemInstance& inst, const Tolerance& tol, int jobs) {
  CheckReport report;
  std::ostringstream os;
  os.precision(12);
  auto verdict = [&](const std::string& what, bool ok) {
    os << (ok ? "ok       " : "MISMATCH ") << what << "\n";
    report.ok = report.ok && ok;
  };
  auto compare = [&](const std::string& what, const Placement& opt,
                     const oracle::OracleResult& ref) {
    std::ostringstream line;
    line.precision(12);
    line << what << ": solver lambda=" << opt.lambda << " weight=" << opt.total_weight
         << " | oracle lambda=" << ref.lambda << " weight=" << ref.weight;
    verdict(line.str(), close(opt.lambda, ref.lambda) && close(opt.total_weight, ref.weight));
  };

  switch (inst.variant) {
    case InstanceVariant::kCsofl:
      compare("csofl", solve_csofl(inst.points, 0.0, inst.k, tol, jobs),
              oracle::brute_csofl(inst.points, 0.0, inst.k, tol));
      break;
    case InstanceVariant::kAllBlueMinRed:
    case InstanceVariant::kMaxBlueNoRed: {
      const Variant v = special_variant(inst.variant);
      const SpecialResult got =
          solve_special(inst.points, 0.0, inst.k, default_variant_spec(v), tol, jobs);
      const oracle::OracleResult ref = oracle::brute_special(inst.points, 0.0, inst.k, v, tol);
      std::ostringstream line;
      line.precision(12);
      line << variant_name(inst.variant) << ": solver lambda=" << got.placement.lambda
           << " blue=" << got.blue_covered << " red=" << got.red_covered
           << " | oracle lambda=" << ref.lambda << " blue=" << ref.blue << " red=" << ref.red;
      verdict(line.str(), close(got.placement.lambda, ref.lambda) &&
                              got.blue_covered == ref.blue && got.red_covered == ref.red);
      if (inst.k != 1) break;
      if (v == Variant::kMaxBlueNoRed) {
        const auto naive = maxblue_nored_naive(inst.points, tol);
        const auto fast = maxblue_nored_fast(inst.points, tol);
        const auto brute = oracle::brute_k1_maxblue(inst.points, tol);
        verdict("k=1 naive " + k1_text(naive) + " | fast " + k1_text(fast) + " | oracle " +
                    k1_text(brute),
                same_optional(naive, fast) && same_optional(naive, brute));
      } else if (std::any_of(inst.points.begin(), inst.points.end(),
                             [](const ColoredPoint& p) { return p.is_blue(); })) {
        const K1Result fvd = allblue_minred(inst.points, tol);
        const K1Result brute = oracle::brute_k1_allblue(inst.points, tol);
        const int blues = static_cast<int>(std::count_if(
            inst.points.begin(), inst.points.end(), [](const ColoredPoint& p) { return p.is_blue(); }));
        verdict("k=1 fvd " + k1_text(fvd) + " | oracle " + k1_text(brute),
                fvd.red_count == brute.red_count && fvd.blue_count == blues);
      }
      break;
    }
    case InstanceVariant::kTLines:
      compare("tlines", solve_tlines(inst.points, inst.lines, inst.k, tol, jobs),
              oracle::brute_tlines(inst.points, inst.lines, inst.k, tol));
      break;
    case InstanceVariant::kDiscrete: {
      const Placement got = solve_discrete(inst.sites, inst.points, inst.k, tol, jobs);
      compare("discrete", got, oracle::brute_discrete(inst.sites, inst.points, inst.k, tol));
      verdict("discrete pairwise separation", pairwise_feasible(got.centers, got.lambda, tol));
      break;
    }
  }
  report.text = os.str();
  return report;
}

}  // namespace sofl::io
