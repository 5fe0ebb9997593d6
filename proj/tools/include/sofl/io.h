#ifndef SOFL_IO_H_
#define SOFL_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sofl/error.h"
#include "sofl/geom.h"
#include "sofl/placement.h"

namespace sofl::io {

enum class InstanceVariant { kCsofl, kAllBlueMinRed, kMaxBlueNoRed, kTLines, kDiscrete };

std::string_view variant_name(InstanceVariant variant);
// Throws SemanticError for an unknown name.
InstanceVariant variant_from_name(std::string_view name);

// True for the two count-objective variants, whose point records carry no
// weight (placeholders +1 / -1 are stored).
bool is_special(InstanceVariant variant);

struct ProblemInstance {
  InstanceVariant variant = InstanceVariant::kCsofl;
  int k = 1;
  std::vector<double> lines;  // kTLines
  std::vector<Point> sites;   // kDiscrete, input order
  std::vector<ColoredPoint> points;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

// Malformed text: unknown record, bad number, wrong token count.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed text describing an invalid instance.
class SemanticError : public Error {
 public:
  using Error::Error;
};

// Line-oriented grammar; '#' starts a comment, blank lines are ignored.
//   variant csofl|allblue-minred|maxblue-nored|tlines|discrete   (first record)
//   k <int>
//   lines <y1> <y2> ...          tlines only, strictly increasing
//   site <x> <y>                 discrete only, strictly convex position
//   B <x> <y> <w>   (w > 0)      weight omitted for the special variants
//   R <x> <y> <w>   (w < 0)
// Single-line variants use the line y = 0 and need every y > 0.
ProblemInstance parse_instance(std::string_view text);

// Canonical text: shortest round-trip numbers, fixed record order.
std::string print_instance(const ProblemInstance& instance);

enum class Format { kText, kJson };

// json keys in order: lambda, weight, centers [{x, line | site}],
// covered_blue, covered_red; reals carry 12 significant digits.
std::string emit_result(const Placement& placement, Format format);

struct GenOptions {
  std::uint64_t seed = 1;
  int n = 8;
  int k = 1;
  InstanceVariant variant = InstanceVariant::kCsofl;
  double red_fraction = 0.3;
  double coord_range = 10.0;
  double weight_range = 10.0;
  int lines = 2;  // kTLines
  int sites = 6;  // kDiscrete
};

// Deterministic instance text. Draws come from std::mt19937_64(seed) as
// u = (bits >> 11) * 2^-53 in this order: for discrete, one angle jitter per
// site; then per point x, y, color (red iff u < red_fraction) and, for the
// weighted variants, |w|. Coordinates and weights are rounded to 1e-3.
std::string generate(const GenOptions& options);

}  // namespace sofl::io

#endif  // SOFL_IO_H_
