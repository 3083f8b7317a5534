// cvxloc: generate shapes, classify points, cross-check and benchmark the
// locators.

#include <iostream>

#include "CLI11.hpp"
#include "cvxloc_tools/commands.hpp"

namespace {

using cvxloc::tools::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "Random seed");
  cmd->add_option("--out", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  namespace t = cvxloc::tools;
  RunConfig cfg;
  CLI::App app{"Point location in convex polygons and polyhedra"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write a generated polygon, OBJ polyhedron or point set");
  bool polygon = false, icosphere = false, points = false;
  auto* opt_polygon = gen->add_flag("--polygon", polygon, "Ellipse-inscribed polygon");
  auto* opt_icosphere = gen->add_flag("--icosphere", icosphere, "Subdivided icosahedron (OBJ)");
  auto* opt_points = gen->add_flag("--points", points, "Query points in the inflated box of --shape");
  opt_polygon->excludes(opt_icosphere)->excludes(opt_points);
  opt_icosphere->excludes(opt_points);
  gen->add_option("-n", cfg.n, "Polygon vertex count")->check(CLI::Range(3, 1 << 26));
  gen->add_option("--axes", cfg.axes, "Ellipse semi-axes a b");
  gen->add_option("--rotation", cfg.rotation, "Ellipse rotation in radians");
  gen->add_flag("--regular", cfg.regular, "Evenly spaced angles, ignores --seed");
  gen->add_option("--level", cfg.level, "Icosphere subdivision level")->check(CLI::Range(0, 5));
  gen->add_flag("--random-affine", cfg.random_affine, "Apply random_affine(seed) to the icosphere");
  gen->add_option("--shape", cfg.shapes, "Shape whose box bounds --points")->check(CLI::ExistingFile);
  gen->add_option("-m", cfg.m, "Point count");
  gen->add_option("--inflation", cfg.inflation, "Box scale about its center")->check(CLI::Range(1.0, 1e6));
  add_common(gen, cfg);

  auto* locate = app.add_subcommand("locate", "Classify every point of a file");
  locate->add_option("--shape", cfg.shapes, "Polygon text file or .obj")->required();
  locate->add_option("--points", cfg.points, "Points file")->required();
  locate->add_option("--method", cfg.method,
                     "linear|wedge|slabs-sorted|slabs-uniform|polar|cubemap");
  locate->add_option("--n-slabs", cfg.n_slabs, "Slab count override")->check(CLI::PositiveNumber);
  locate->add_option("--resolution", cfg.resolution, "Cube-map R override")->check(CLI::PositiveNumber);
  locate->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Compare every locator with the linear scan");
  verify->add_option("--shape", cfg.shapes, "Shape files (default: built-in corpus)");
  verify->add_option("--points", cfg.points, "Points file for a single --shape");
  verify->add_option("-m", cfg.m, "Generated points per shape");
  verify->add_option("--inflation", cfg.inflation, "Query box scale")->check(CLI::Range(1.0, 1e6));
  verify->add_option("--n-slabs", cfg.n_slabs, "Slab count override")->check(CLI::PositiveNumber);
  verify->add_option("--resolution", cfg.resolution, "Cube-map R override")->check(CLI::PositiveNumber);
  verify->add_flag("-v,--verbose", cfg.verbose, "Print the full report");
  add_common(verify, cfg);

  auto* bench = app.add_subcommand("bench", "Time locators and print CSV");
  bench->add_option("--dim", cfg.dim, "2 or 3");
  bench->add_option("--method", cfg.methods, "Methods, comma separated")->delimiter(',');
  bench->add_option("--sizes", cfg.sizes, "Polygon sizes N")->delimiter(',');
  auto* levels = bench->add_option("--levels", cfg.sizes, "Icosphere levels (dim 3)")->delimiter(',');
  bench->add_option("--queries", cfg.query_counts, "Query counts M")->delimiter(',');
  bench->add_option("--reps", cfg.reps, "Timed repetitions (median is reported)");
  bench->add_option("--warmup", cfg.warmup, "Untimed repetitions");
  bench->add_option("--inflation", cfg.inflation, "Query box scale")->check(CLI::Range(1.0, 1e6));
  bench->add_option("--n-slabs", cfg.n_slabs, "Slab count override")->check(CLI::PositiveNumber);
  bench->add_option("--slabs-per-edge", cfg.slabs_per_edge, "Use n_slabs = k * N")
      ->check(CLI::PositiveNumber);
  bench->add_option("--resolution", cfg.resolution, "Cube-map R override")->check(CLI::PositiveNumber);
  add_common(bench, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return t::kExitUsage;
  }
  if (levels->count() > 0 && cfg.dim == 2) cfg.dim = 3;

  if (gen->parsed()) {
    if (icosphere) cfg.gen_kind = t::GenKind::Icosphere;
    if (points) cfg.gen_kind = t::GenKind::Points;
    if (!polygon && !icosphere && !points) {
      std::cerr << "cvxloc gen: choose --polygon, --icosphere or --points\n";
      return t::kExitUsage;
    }
    return t::cmd_gen(cfg, std::cout, std::cerr);
  }
  if (locate->parsed()) return t::cmd_locate(cfg, std::cout, std::cerr);
  if (verify->parsed()) return t::cmd_verify(cfg, std::cout, std::cerr);
  return t::cmd_bench(cfg, std::cout, std::cerr);
}
