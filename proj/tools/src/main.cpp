#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcmi/error.hpp"
#include "pcmi/version.hpp"
#include "pcmi_cli/commands.hpp"

namespace {

using namespace pcmi;
using namespace pcmi::cli;

struct SuiteFlags {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::vector<std::size_t> orders{3, 4, 5, 6, 7};
  double b_min = 1.0;
  double b_max = 5.0;
  std::size_t b_steps = 41;
  std::vector<double> delta_grid = default_delta_grid();

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "Base seed")->capture_default_str();
    app->add_option("--trials", trials, "Random trials per order")->capture_default_str();
    app->add_option("--orders", orders, "Matrix orders, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    app->add_option("--b-min", b_min, "Smallest intensification exponent")->capture_default_str();
    app->add_option("--b-max", b_max, "Largest intensification exponent")->capture_default_str();
    app->add_option("--b-steps", b_steps, "Number of exponents")->capture_default_str();
    app->add_option("--delta-grid", delta_grid, "Perturbation exponents, comma separated")
        ->delimiter(',');
  }

  SuiteConfig config() const {
    SuiteConfig c;
    c.seed = seed;
    c.trials_per_check = trials;
    c.orders = orders;
    c.b_grid = linear_grid(b_min, b_max, b_steps);
    c.delta_grid = delta_grid;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inconsistency indices for pairwise comparison matrices"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string index_list = "all";
  std::string matrix;
  int digits = 9;
  auto* compute = app.add_subcommand("compute", "Evaluate indices on a matrix file");
  compute->add_option("--matrix", matrix, "Matrix file")->required();
  compute->add_option("--index", index_list, "Comma separated indices or 'all'")
      ->capture_default_str();
  compute->add_option("--digits", digits, "Decimals printed")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  SuiteFlags suite;
  std::string out_path;
  std::string format = "table";
  unsigned threads = 0;
  auto* axioms = app.add_subcommand("axioms", "Run the property checkers");
  axioms->add_option("--index", index_list, "Comma separated indices or 'all'")
      ->capture_default_str();
  suite.attach(axioms);
  axioms->add_option("--out", out_path, "Write the report document here");
  axioms->add_option("--format", format, "Standard output format")
      ->check(CLI::IsMember({"table", "doc"}))
      ->capture_default_str();
  axioms->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::string curve_index;
  std::string mode = "b";
  std::size_t p = 0;
  std::size_t q = 0;
  SuiteFlags curve_flags;
  auto* curve = app.add_subcommand("curve", "Sample an index along b or delta");
  curve->add_option("--index", curve_index, "Index")->required();
  curve->add_option("--matrix", matrix, "Matrix file")->required();
  curve->add_option("--mode", mode, "b or delta")
      ->check(CLI::IsMember({"b", "delta"}))
      ->capture_default_str();
  curve->add_option("--b-min", curve_flags.b_min)->capture_default_str();
  curve->add_option("--b-max", curve_flags.b_max)->capture_default_str();
  curve->add_option("--b-steps", curve_flags.b_steps)->capture_default_str();
  curve->add_option("--delta-grid", curve_flags.delta_grid)->delimiter(',');
  curve->add_option("--p", p, "Row of the perturbed entry (1-based)");
  curve->add_option("--q", q, "Column of the perturbed entry (1-based)");
  curve->add_option("--out", out_path, "CSV output file");

  std::string search_index;
  std::string property;
  SuiteFlags search_flags;
  search_flags.trials = 10000;
  auto* search = app.add_subcommand("search", "Hunt for a property violation");
  search->add_option("--index", search_index, "Index")->required();
  search->add_option("--property", property, "P1..P6")->required();
  search_flags.attach(search);
  search->add_option("--out", out_path, "Write the witness here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      ComputeOptions opts{matrix, parse_index_list(index_list), digits};
      return run_compute(opts, std::cout, std::cerr);
    }
    if (*axioms) {
      AxiomsOptions opts;
      opts.indices = parse_index_list(index_list);
      opts.config = suite.config();
      if (!out_path.empty()) opts.out = out_path;
      opts.format = format == "doc" ? OutputFormat::kDocument : OutputFormat::kTable;
      opts.threads = threads;
      return run_axioms(opts, std::cout, std::cerr);
    }
    if (*curve) {
      CurveOptions opts;
      const auto id = parse_index_id(curve_index);
      if (!id) throw Error(ErrorCode::kInvalidArgument, "unknown index '" + curve_index + "'");
      opts.index = *id;
      opts.matrix = matrix;
      if (mode == "b") {
        opts.grid = linear_grid(curve_flags.b_min, curve_flags.b_max, curve_flags.b_steps);
      } else {
        opts.mode = CurveMode::kPerturbation;
        opts.grid = curve_flags.delta_grid;
        if (p == 0 || q == 0) {
          throw Error(ErrorCode::kInvalidArgument, "--mode delta needs --p and --q (1-based)");
        }
        opts.entry = std::pair{p - 1, q - 1};
      }
      if (!out_path.empty()) opts.out = out_path;
      return run_curve(opts, std::cout, std::cerr);
    }
    SearchOptions opts;
    const auto id = parse_index_id(search_index);
    if (!id) throw Error(ErrorCode::kInvalidArgument, "unknown index '" + search_index + "'");
    const auto prop = parse_property(property);
    if (!prop) throw Error(ErrorCode::kInvalidArgument, "unknown property '" + property + "'");
    opts.index = *id;
    opts.property = *prop;
    opts.config = search_flags.config();
    if (!out_path.empty()) opts.out = out_path;
    return run_search(opts, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
