// sofl: solve, generate and cross-check facility location instances.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sofl/driver.h"
#include "sofl/error.h"
#include "sofl/io.h"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kTooLarge = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sofl::InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sofl::io::ProblemInstance load(const std::string& path, int k_override) {
  sofl::io::ProblemInstance inst = sofl::io::parse_instance(read_input(path));
  if (k_override > 0) inst.k = k_override;
  return inst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-obnoxious facility location on lines and convex sites"};
  app.require_subcommand(1);

  std::string input;
  int k = 0;
  std::string algorithm = "dp";
  double eps = 1e-9;
  std::string format = "text";
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--input", input, "instance file, '-' for stdin")->required();
  solve->add_option("--k", k, "override the instance's k")->check(CLI::PositiveNumber);
  solve->add_option("--algorithm", algorithm, "dp|naive|fast|fvd")
      ->check(CLI::IsMember({"dp", "naive", "fast", "fvd"}));
  solve->add_option("--tol", eps, "relative tolerance")->check(CLI::NonNegativeNumber);
  solve->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--jobs", jobs, "worker threads over radii")->check(CLI::PositiveNumber);

  sofl::io::GenOptions gen_opts;
  std::string variant = "csofl";
  std::string out;
  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--seed", gen_opts.seed)->required();
  gen->add_option("--n", gen_opts.n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--k", gen_opts.k)->required()->check(CLI::PositiveNumber);
  gen->add_option("--variant", variant)
      ->required()
      ->check(CLI::IsMember({"csofl", "allblue-minred", "maxblue-nored", "tlines", "discrete"}));
  gen->add_option("--red-fraction", gen_opts.red_fraction)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--coord-range", gen_opts.coord_range)->check(CLI::PositiveNumber);
  gen->add_option("--weight-range", gen_opts.weight_range)->check(CLI::PositiveNumber);
  gen->add_option("--lines", gen_opts.lines, "tlines: number of lines")
      ->check(CLI::PositiveNumber);
  gen->add_option("--sites", gen_opts.sites, "discrete: number of sites")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "compare the solvers with the oracles");
  check->add_option("--input", input, "instance file, '-' for stdin")->required();
  check->add_option("--k", k, "override the instance's k")->check(CLI::PositiveNumber);
  check->add_option("--tol", eps, "relative tolerance")->check(CLI::NonNegativeNumber);
  check->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  const sofl::Tolerance tol{eps, sofl::Tolerance::Mode::kRelative};
  try {
    if (*solve) {
      const auto inst = load(input, k);
      const auto placement =
          sofl::io::solve_instance(inst, sofl::io::algorithm_from_name(algorithm), tol, jobs);
      std::cout << sofl::io::emit_result(
          placement, format == "json" ? sofl::io::Format::kJson : sofl::io::Format::kText);
      return kOk;
    }
    if (*gen) {
      gen_opts.variant = sofl::io::variant_from_name(variant);
      const std::string text = sofl::io::generate(gen_opts);
      if (out.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw sofl::InvalidInput("cannot write '" + out + "'");
        f << text;
      }
      return kOk;
    }
    const auto inst = load(input, k);
    const auto report = sofl::io::check_instance(inst, tol, jobs);
    std::cout << report.text;
    return report.ok ? kOk : kMismatch;
  } catch (const sofl::TooLarge& e) {
    std::cerr << "sofl: " << e.what() << "\n";
    return kTooLarge;
  } catch (const sofl::Error& e) {
    std::cerr << "sofl: " << e.what() << "\n";
    return kBadInput;
  }
}
