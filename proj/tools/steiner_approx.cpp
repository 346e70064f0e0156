#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "steiner/bounds.hpp"
#include "steiner/document.hpp"
#include "steiner/instance_gen.hpp"
#include "steiner/melzak.hpp"
#include "steiner/svg.hpp"
#include "steiner/table.hpp"
#include "steiner/verify.hpp"

namespace {

using namespace steiner;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

double to_radians(double value, bool degrees) { return degrees ? value * kPi / 180.0 : value; }

void print_summary(const TreeDocument& doc) {
  double eps_actual;
  try {
    eps_actual = measure_eps(doc.tree);
  } catch (const DegenerateEdge&) {
    eps_actual = std::numeric_limits<double>::quiet_NaN();
  }
  std::printf("construction=%s n=%d L=%.12g eps_actual=%.12g\n", doc.construction.c_str(),
              doc.tree.topology.n_terminals(), doc.tree.length(), eps_actual);
}

int cmd_generate(const std::string& kind, int k, int n, double eps, double delta,
                 std::uint64_t seed, const std::string& output) {
  TreeDocument doc;
  if (kind == "tk") {
    doc = TreeDocument(build_tk_recursive({k, eps}), "tk");
    doc.params = {{"k", k}, {"eps", eps}};
  } else if (kind == "circle") {
    // Default: tiny relative to the innermost circle.
    if (delta <= 0.0) delta = 1e-6 * std::pow(std::sin(kPi / 3.0 - eps / 2.0), k);
    doc = TreeDocument(build_circle_construction(k, eps, delta), "circle");
    doc.params = {{"k", k}, {"eps", eps}, {"delta", delta}};
  } else if (kind == "witness3") {
    if (delta <= 0.0) delta = 1e-6;
    doc = TreeDocument(build_witness3(eps, delta), "witness3");
    doc.params = {{"eps", eps}, {"delta", delta}};
  } else if (kind == "witness4") {
    if (delta <= 0.0) delta = 1e-6;
    doc = TreeDocument(build_witness4(eps, delta), "witness4");
    doc.params = {{"eps", eps}, {"delta", delta}};
  } else if (kind == "random") {
    std::mt19937_64 rng(seed);
    doc = TreeDocument(random_approx_tree(n, eps, rng), "random");
    doc.params = {{"n", n}, {"eps", eps}, {"seed", seed}};
  } else {
    throw Error("unknown construction " + kind);
  }
  if (!output.empty()) doc.save(output);
  print_summary(doc);
  return 0;
}

int cmd_solve(const std::string& input, const std::string& output, bool check_oracle) {
  auto doc = TreeDocument::load(input);
  auto result = solve(doc.tree);
  double tree_length = doc.tree.length();
  std::printf("status=%s\n", result.status == SolveStatus::NonDegenerate ? "NonDegenerate"
                                                                         : "Degenerate");
  std::printf("L_T=%.12g\n", tree_length);
  if (result.status == SolveStatus::NonDegenerate) {
    std::printf("L_S=%.12g\n", result.length);
    std::printf("ratio_minus_1=%.12g\n", tree_length / result.length - 1.0);
  } else {
    std::printf("lower_bound=%.12g\n", result.length);
    for (const auto& edge : result.collapsed_edges) {
      const char* reason = "";
      switch (edge.reason) {
        case CollapseReason::lambda_low: reason = "lambda<=0"; break;
        case CollapseReason::lambda_high: reason = "lambda>=1"; break;
        case CollapseReason::parent_inside_circle: reason = "parent inside C_i"; break;
        case CollapseReason::off_minor_arc: reason = "off minor arc"; break;
      }
      std::printf("collapsed edge (%d,%d): %s\n", edge.parent, edge.child, reason);
    }
  }
  if (check_oracle) {
    auto oracle =
        numeric_oracle(doc.tree.topology, doc.tree.position, 100000, 1e-10, &doc.tree.position);
    std::printf("oracle_length=%.12g\n", oracle.length);
    if (result.status == SolveStatus::NonDegenerate &&
        std::abs(oracle.length - result.length) > 1e-6) {
      std::fprintf(stderr, "oracle disagrees with solve by %.3g\n",
                   std::abs(oracle.length - result.length));
      return 1;
    }
  }
  if (!output.empty() && result.tree) {
    TreeDocument solved_doc(*result.tree, "solved:" + doc.construction);
    solved_doc.save(output);
  }
  return 0;
}

int cmd_unfold(const std::string& input, const std::string& output, const std::string& svg_path) {
  auto doc = TreeDocument::load(input);
  auto path = unfold(doc.tree, doc.tree.topology.root_terminal());

  PathDocument report;
  report.path = path;
  report.tree_length = doc.tree.length();
  report.endpoint_distance = path.endpoint_distance();
  report.kappa = path_kappa(path);
  if (report.kappa < kPi) report.schmidt_bound = 1.0 / std::cos(report.kappa / 2.0);

  std::printf("path_length=%.12g\n", path.length());
  std::printf("endpoint_distance=%.12g\n", report.endpoint_distance);
  std::printf("kappa=%.12g\n", report.kappa);
  if (report.schmidt_bound) {
    std::printf("schmidt_bound=%.12g\n", *report.schmidt_bound);
  } else {
    std::printf("schmidt_bound=n/a (kappa >= pi)\n");
  }
  if (!output.empty()) report.save(output);
  if (!svg_path.empty()) write_text(svg_path, render_path_svg(path));
  return 0;
}

int cmd_table(const TableGrid& grid, bool roots, int roots_k_max, const std::string& output) {
  std::string csv = roots ? root_probe_csv(roots_k_max) : bound_table_csv(grid);
  if (output.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text(output, csv);
  }
  return 0;
}

int cmd_render(const std::string& input, const std::string& output) {
  std::string text = read_text(input);
  std::string svg = looks_like_path_document(text)
                        ? render_path_svg(PathDocument::parse(text).path)
                        : render_tree_svg(TreeDocument::parse(text).tree);
  write_text(output, svg);
  return 0;
}

int cmd_verify(const VerifyOptions& options) {
  auto results = run_acceptance(options, &std::cout);
  bool all_pass = !results.empty();
  for (const auto& result : results) all_pass = all_pass && result.pass;
  std::printf("%s\n", all_pass ? "ALL CHECKS PASSED" : "CHECKS FAILED");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epsilon-approximate Euclidean Steiner trees: constructions, Melzak solver, "
               "unfolding certificates and bound tables"};
  app.require_subcommand(1);
  bool degrees = false;
  app.add_flag("--degrees", degrees, "interpret angle arguments as degrees");

  // generate
  auto* generate = app.add_subcommand("generate", "construct a tree and write it as JSON");
  generate->require_subcommand(1);
  struct {
    int k = 3;
    int n = 8;
    double eps = 0.0;
    double delta = 0.0;  // 0 picks the per-construction default
    std::uint64_t seed = 1;
    std::string output;
  } gen;
  std::string gen_kind;
  for (const char* kind : {"tk", "circle", "witness3", "witness4", "random"}) {
    auto* sub = generate->add_subcommand(kind);
    sub->add_option("--k", gen.k, "family index");
    sub->add_option("--n", gen.n, "terminal count");
    sub->add_option("--eps", gen.eps, "angle error (radians)");
    sub->add_option("--delta", gen.delta, "small edge length");
    sub->add_option("--seed", gen.seed, "random seed");
    sub->add_option("-o,--output", gen.output, "output JSON path");
    sub->callback([&gen_kind, kind] { gen_kind = kind; });
  }

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "shortest same-topology tree via Melzak");
  std::string solve_input, solve_output;
  bool check_oracle = false;
  solve_cmd->add_option("input", solve_input, "tree JSON")->required();
  solve_cmd->add_option("-o,--output", solve_output, "write S(T) as JSON");
  solve_cmd->add_flag("--check-oracle", check_oracle, "cross-validate with the numeric oracle");

  // unfold
  auto* unfold_cmd = app.add_subcommand("unfold", "unfold a tree into a path certificate");
  std::string unfold_input, unfold_output, unfold_svg;
  unfold_cmd->add_option("input", unfold_input, "tree JSON")->required();
  unfold_cmd->add_option("-o,--output", unfold_output, "write the path report as JSON");
  unfold_cmd->add_option("--svg", unfold_svg, "write the path as SVG");

  // table
  auto* table_cmd = app.add_subcommand("table", "bound formulas over a parameter grid as CSV");
  TableGrid grid = TableGrid::default_grid();
  std::string table_output;
  bool table_roots = false;
  int table_roots_k_max = 12;
  table_cmd->add_option("--n", grid.n_values, "terminal counts");
  table_cmd->add_option("--k", grid.k_values, "family indices");
  table_cmd->add_option("--eps", grid.eps_values, "angle errors (radians)");
  table_cmd->add_flag("--roots", table_roots, "emit the polynomial root-distance study instead");
  table_cmd->add_option("--roots-k-max", table_roots_k_max, "family cap for --roots");
  table_cmd->add_option("-o,--output", table_output, "output CSV path");

  // render
  auto* render_cmd = app.add_subcommand("render", "render a tree or path document as SVG");
  std::string render_input, render_output;
  render_cmd->add_option("input", render_input, "tree or path JSON")->required();
  render_cmd->add_option("-o,--output", render_output, "output SVG path")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  VerifyOptions verify_options;
  verify_cmd->add_option("--k-max", verify_options.k_max, "cap the family index (bounds runtime)");
  verify_cmd->add_option("--only", verify_options.only, "run only criteria matching substring");
  verify_cmd->add_option("--seed", verify_options.seed, "random-suite seed");
  verify_cmd->add_option("--instances", verify_options.random_instances,
                         "random-suite instance count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (generate->parsed()) {
      double eps = to_radians(gen.eps, degrees);
      return cmd_generate(gen_kind, gen.k, gen.n, eps, gen.delta, gen.seed, gen.output);
    }
    if (solve_cmd->parsed()) return cmd_solve(solve_input, solve_output, check_oracle);
    if (unfold_cmd->parsed()) return cmd_unfold(unfold_input, unfold_output, unfold_svg);
    if (table_cmd->parsed()) {
      if (degrees) {
        for (double& eps : grid.eps_values) eps = to_radians(eps, true);
      }
      return cmd_table(grid, table_roots, table_roots_k_max, table_output);
    }
    if (render_cmd->parsed()) return cmd_render(render_input, render_output);
    if (verify_cmd->parsed()) return cmd_verify(verify_options);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
