#include "sofl/io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sofl/discrete.h"

namespace sofl::io {

namespace {

constexpr std::pair<InstanceVariant, std::string_view> kNames[] = {
    {InstanceVariant::kCsofl, "csofl"},
    {InstanceVariant::kAllBlueMinRed, "allblue-minred"},
    {InstanceVariant::kMaxBlueNoRed, "maxblue-nored"},
    {InstanceVariant::kTLines, "tlines"},
    {InstanceVariant::kDiscrete, "discrete"},
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double to_real(std::string_view token, int line) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParseError(line, "bad number '" + std::string(token) + "'");
  }
  return v;
}

int to_int(std::string_view token, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad integer '" + std::string(token) + "'");
  }
  return v;
}

std::string real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double significant12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string real12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string_view variant_name(InstanceVariant variant) {
  for (const auto& [v, name] : kNames) {
    if (v == variant) return name;
  }
  return "?";
}

InstanceVariant variant_from_name(std::string_view name) {
  for (const auto& [v, n] : kNames) {
    if (n == name) return v;
  }
  throw SemanticError("unknown variant '" + std::string(name) + "'");
}

bool is_special(InstanceVariant variant) {
  return variant == InstanceVariant::kAllBlueMinRed ||
         variant == InstanceVariant::kMaxBlueNoRed;
}

ProblemInstance parse_instance(std::string_view text) {
  ProblemInstance inst;
  bool have_variant = false;
  bool have_k = false;
  bool have_lines = false;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string_view head = tok[0];

    if (head == "variant") {
      if (have_variant) throw ParseError(lineno, "duplicate variant record");
      if (tok.size() != 2) throw ParseError(lineno, "expected 'variant <name>'");
      try {
        inst.variant = variant_from_name(tok[1]);
      } catch (const SemanticError& e) {
        throw ParseError(lineno, e.what());
      }
      have_variant = true;
      continue;
    }
    if (!have_variant) throw ParseError(lineno, "the first record must be 'variant'");

    const bool special = is_special(inst.variant);
    if (head == "k") {
      if (have_k) throw ParseError(lineno, "duplicate k record");
      if (tok.size() != 2) throw ParseError(lineno, "expected 'k <int>'");
      inst.k = to_int(tok[1], lineno);
      have_k = true;
    } else if (head == "lines") {
      if (have_lines) throw ParseError(lineno, "duplicate lines record");
      if (tok.size() < 2) throw ParseError(lineno, "expected 'lines <y1> ...'");
      for (size_t i = 1; i < tok.size(); ++i) inst.lines.push_back(to_real(tok[i], lineno));
      have_lines = true;
    } else if (head == "site") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'site <x> <y>'");
      inst.sites.push_back({to_real(tok[1], lineno), to_real(tok[2], lineno)});
    } else if (head == "B" || head == "R") {
      const size_t want = special ? 3 : 4;
      if (tok.size() != want) {
        throw ParseError(lineno, special ? "expected '" + std::string(head) + " <x> <y>'"
                                         : "expected '" + std::string(head) + " <x> <y> <w>'");
      }
      ColoredPoint p;
      p.id = static_cast<int>(inst.points.size());
      p.x = to_real(tok[1], lineno);
      p.y = to_real(tok[2], lineno);
      p.color = head == "B" ? Color::kBlue : Color::kRed;
      if (special) {
        p.weight = p.is_blue() ? 1.0 : -1.0;
      } else {
        p.weight = to_real(tok[3], lineno);
        if (p.is_blue() && !(p.weight > 0.0)) {
          throw SemanticError("line " + std::to_string(lineno) + ": blue weight must be > 0");
        }
        if (p.is_red() && !(p.weight < 0.0)) {
          throw SemanticError("line " + std::to_string(lineno) + ": red weight must be < 0");
        }
      }
      inst.points.push_back(p);
    } else {
      throw ParseError(lineno, "unknown record '" + std::string(head) + "'");
    }
  }

  if (!have_variant) throw SemanticError("missing variant record");
  if (!have_k) throw SemanticError("missing k record");
  if (inst.k < 1) throw SemanticError("k must be >= 1");
  const bool tlines = inst.variant == InstanceVariant::kTLines;
  const bool discrete = inst.variant == InstanceVariant::kDiscrete;
  if (tlines != have_lines) {
    throw SemanticError(tlines ? "tlines needs a lines record" : "lines record only allowed for tlines");
  }
  if (discrete != !inst.sites.empty()) {
    throw SemanticError(discrete ? "discrete needs site records" : "site records only allowed for discrete");
  }
  if (tlines) {
    for (size_t i = 1; i < inst.lines.size(); ++i) {
      if (!(inst.lines[i] > inst.lines[i - 1])) {
        throw SemanticError("lines must be strictly increasing");
      }
    }
  }
  if (discrete) {
    try {
      canonicalize_sites(inst.sites);
    } catch (const InvalidInput& e) {
      throw SemanticError(e.what());
    }
  }
  if (!tlines && !discrete) {
    for (const ColoredPoint& p : inst.points) {
      if (!(p.y > 0.0)) {
        throw SemanticError("point " + std::to_string(p.id) + " must lie above y = 0");
      }
    }
  }
  return inst;
}

std::string print_instance(const ProblemInstance& instance) {
  std::string out;
  out += "variant " + std::string(variant_name(instance.variant)) + "\n";
  out += "k " + std::to_string(instance.k) + "\n";
  if (instance.variant == InstanceVariant::kTLines) {
    out += "lines";
    for (double y : instance.lines) out += " " + real(y);
    out += "\n";
  }
  for (const Point& s : instance.sites) out += "site " + real(s.x) + " " + real(s.y) + "\n";
  const bool special = is_special(instance.variant);
  for (const ColoredPoint& p : instance.points) {
    out += p.is_blue() ? "B " : "R ";
    out += real(p.x) + " " + real(p.y);
    if (!special) out += " " + real(p.weight);
    out += "\n";
  }
  return out;
}

std::string emit_result(const Placement& placement, Format format) {
  if (format == Format::kJson) {
    nlohmann::ordered_json j;
    j["lambda"] = significant12(placement.lambda);
    j["weight"] = significant12(placement.total_weight);
    j["centers"] = nlohmann::ordered_json::array();
    for (const Center& c : placement.centers) {
      nlohmann::ordered_json e;
      e["x"] = significant12(c.x);
      if (c.site >= 0) {
        e["site"] = c.site;
      } else {
        e["line"] = c.line < 0 ? 0 : c.line;
      }
      j["centers"].push_back(e);
    }
    j["covered_blue"] = placement.covered_blue;
    j["covered_red"] = placement.covered_red;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "lambda       " << real12(placement.lambda) << "\n";
  os << "weight       " << real12(placement.total_weight) << "\n";
  os << "centers      " << placement.centers.size() << "\n";
  for (const Center& c : placement.centers) {
    os << "  x " << real12(c.x) << " y " << real12(c.y);
    if (c.site >= 0) {
      os << " site " << c.site;
    } else {
      os << " line " << (c.line < 0 ? 0 : c.line);
    }
    os << "\n";
  }
  os << "covered_blue";
  for (int id : placement.covered_blue) os << " " << id;
  os << "\ncovered_red ";
  for (int id : placement.covered_red) os << " " << id;
  os << "\n";
  return os.str();
}

std::string generate(const GenOptions& options) {
  if (options.n < 0) throw SemanticError("gen: n must be >= 0");
  if (options.k < 1) throw SemanticError("gen: k must be >= 1");
  std::mt19937_64 rng(options.seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto quantize = [](double v) { return std::round(v * 1000.0) / 1000.0; };
  const double range = options.coord_range;

  ProblemInstance inst;
  inst.variant = options.variant;
  inst.k = options.k;
  if (options.variant == InstanceVariant::kTLines) {
    if (options.lines < 1) throw SemanticError("gen: lines must be >= 1");
    for (int j = 0; j < options.lines; ++j) {
      inst.lines.push_back(quantize(range * j / options.lines));
    }
  }
  if (options.variant == InstanceVariant::kDiscrete) {
    if (options.sites < 1) throw SemanticError("gen: sites must be >= 1");
    const int s = options.sites;
    // One angle per sector keeps the sites in convex position; listing the
    // sectors in reverse gives clockwise order.
    std::vector<Point> ring;
    for (int i = 0; i < s; ++i) {
      const double theta = 2.0 * std::numbers::pi * (i + 0.1 + 0.8 * uniform()) / s;
      ring.push_back({quantize(range / 2 + range / 2 * std::cos(theta)),
                      quantize(range / 2 + range / 2 * std::sin(theta))});
    }
    inst.sites.assign(ring.rbegin(), ring.rend());
  }
  const bool special = is_special(options.variant);
  const bool above = options.variant != InstanceVariant::kTLines &&
                     options.variant != InstanceVariant::kDiscrete;
  for (int i = 0; i < options.n; ++i) {
    ColoredPoint p;
    p.id = i;
    p.x = quantize(uniform() * range);
    p.y = quantize(uniform() * range);
    if (above) p.y = std::max(p.y, 0.001);
    p.color = uniform() < options.red_fraction ? Color::kRed : Color::kBlue;
    if (special) {
      p.weight = p.is_blue() ? 1.0 : -1.0;
    } else {
      const double mag = std::max(0.001, quantize(uniform() * options.weight_range));
      p.weight = p.is_blue() ? mag : -mag;
    }
    inst.points.push_back(p);
  }
  return print_instance(inst);
}

}  // namespace sofl::io
