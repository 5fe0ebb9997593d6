#include "sofl/solver.h"

#include <algorithm>
#include <exception>
#include <thread>

#include "sofl/candidates.h"
#include "sofl/error.h"
#include "sofl/klink.h"

namespace sofl {

Placement solve_over_radii(std::span<const double> lambdas,
                           const std::function<Placement(double)>& solve_one,
                           int jobs) {
  std::vector<Placement> results(lambdas.size());
  const size_t workers =
      std::clamp<size_t>(jobs < 1 ? 1 : static_cast<size_t>(jobs), 1,
                         std::max<size_t>(1, lambdas.size()));
  if (workers == 1) {
    for (size_t i = 0; i < lambdas.size(); ++i) results[i] = solve_one(lambdas[i]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (size_t i = t; i < lambdas.size(); i += workers) {
            results[i] = solve_one(lambdas[i]);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Placement best;
  bool have = false;
  for (Placement& p : results) {
    if (!have || weight_improves(p.total_weight, best.total_weight)) {
      best = std::move(p);
      have = true;
    }
  }
  return best;
}

Placement solve_csofl_over(std::span<const ColoredPoint> points, double line_y,
                           int k, std::span<const double> lambdas,
                           const Tolerance& tol, int jobs) {
  if (k < 1) throw InvalidInput("solve_csofl: k must be >= 1");
  return solve_over_radii(
      lambdas,
      [&](double lambda) { return solve_fixed_radius(points, line_y, lambda, k, tol); },
      jobs);
}

Placement solve_csofl(std::span<const ColoredPoint> points, double line_y,
                      int k, const Tolerance& tol, int jobs) {
  if (k < 1) throw InvalidInput("solve_csofl: k must be >= 1");
  const auto lambdas = distinct_lambdas(solver_radii_line(points, line_y, k, tol));
  return solve_csofl_over(points, line_y, k, lambdas, tol, jobs);
}

VariantSpec default_variant_spec(Variant variant) {
  switch (variant) {
    case Variant::kAllBlueMinRed:
      return {variant, -1.0};
    case Variant::kMaxBlueNoRed:
      return {variant, 1.0};
    default:
      return {variant, 0.0};
  }
}

std::vector<ColoredPoint> reduce_allblue_minred(std::span<const ColoredPoint> points,
                                                double delta) {
  if (!(delta < 0.0)) throw InvalidDelta("reduce_allblue_minred: delta must be < 0");
  const auto reds = std::count_if(points.begin(), points.end(),
                                  [](const ColoredPoint& p) { return p.is_red(); });
  std::vector<ColoredPoint> out(points.begin(), points.end());
  for (ColoredPoint& p : out) {
    p.weight = p.is_red() ? delta : -static_cast<double>(reds) * delta + 1.0;
  }
  return out;
}

std::vector<ColoredPoint> reduce_maxblue_nored(std::span<const ColoredPoint> points,
                                               double delta) {
  if (!(delta > 0.0)) throw InvalidDelta("reduce_maxblue_nored: delta must be > 0");
  const auto blues = std::count_if(points.begin(), points.end(),
                                   [](const ColoredPoint& p) { return p.is_blue(); });
  std::vector<ColoredPoint> out(points.begin(), points.end());
  for (ColoredPoint& p : out) {
    p.weight = p.is_blue() ? delta : -static_cast<double>(blues) * delta - 1.0;
  }
  return out;
}

SpecialResult solve_special(std::span<const ColoredPoint> points, double line_y,
                            int k, const VariantSpec& spec, const Tolerance& tol,
                            int jobs) {
  std::vector<ColoredPoint> reduced;
  switch (spec.variant) {
    case Variant::kAllBlueMinRed:
      reduced = reduce_allblue_minred(points, spec.delta);
      break;
    case Variant::kMaxBlueNoRed:
      reduced = reduce_maxblue_nored(points, spec.delta);
      break;
    default:
      throw InvalidInput("solve_special: variant must not be kGeneral");
  }
  SpecialResult out;
  out.placement = solve_csofl(reduced, line_y, k, tol, jobs);
  out.blue_covered = static_cast<int>(out.placement.covered_blue.size());
  out.red_covered = static_cast<int>(out.placement.covered_red.size());
  out.blue_total = static_cast<int>(std::count_if(
      points.begin(), points.end(), [](const ColoredPoint& p) { return p.is_blue(); }));
  out.all_blue_covered = out.blue_covered == out.blue_total;
  return out;
}

}  // namespace sofl
