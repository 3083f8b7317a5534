#include "cvxloc_tools/commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "cvxloc/baseline.hpp"
#include "cvxloc/compare.hpp"
#include "cvxloc/cubemap.hpp"
#include "cvxloc/generators.hpp"
#include "cvxloc/io.hpp"
#include "cvxloc/polar.hpp"
#include "cvxloc_tools/bench.hpp"

namespace cvxloc::tools {

namespace {

using Shape = std::variant<ConvexPolygon, ConvexPolyhedron>;

Shape load_shape(const std::filesystem::path& path) {
  if (is_obj_path(path)) return parse_polyhedron_obj(path);
  return parse_polygon_file(path);
}

std::function<Containment(Point2)> make_locator(const ConvexPolygon& polygon,
                                                const std::string& method,
                                                std::optional<std::size_t> n_slabs) {
  if (method == "linear") {
    return [shape = polygon](Point2 p) { return locate_linear_2d(shape, p); };
  }
  if (method == "wedge") {
    return [idx = WedgeIndex2::build(polygon)](Point2 p) { return idx.locate(p); };
  }
  if (method == "slabs-sorted") {
    return [idx = SortedSlabIndex2::build(polygon)](Point2 p) { return idx.locate(p); };
  }
  if (method == "slabs-uniform") {
    return [idx = UniformSlabIndex2::build(polygon, n_slabs)](Point2 p) { return idx.locate(p); };
  }
  if (method.empty() || method == "polar") {
    return [idx = PolarIndex2::build(polygon, {n_slabs, std::nullopt})](Point2 p) {
      return idx.locate(p);
    };
  }
  throw std::invalid_argument("method '" + method + "' does not apply to polygons");
}

std::function<Containment(Point3)> make_locator(const ConvexPolyhedron& polyhedron,
                                                const std::string& method,
                                                std::optional<std::uint32_t> resolution) {
  if (method == "linear") {
    return [shape = polyhedron](Point3 p) { return locate_linear_3d(shape, p); };
  }
  if (method.empty() || method == "cubemap") {
    return [idx = CubeMapIndex3::build(polyhedron, {resolution, std::nullopt})](Point3 p) {
      return idx.locate(p);
    };
  }
  throw std::invalid_argument("method '" + method + "' does not apply to polyhedra");
}

// Runs body against a buffer and copies it to --out or `out` only on success,
// so a failing command never leaves a partial file behind.
template <class Body>
int guarded(const char* name, const RunConfig& cfg, std::ostream& out, std::ostream& err,
            Body body) {
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = body(buffer);
  } catch (const ParseError& e) {
    err << "cvxloc " << name << ": parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "cvxloc " << name << ": invalid shape: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cvxloc " << name << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    file << buffer.str();
    if (!file.flush()) {
      err << "cvxloc " << name << ": cannot write " << cfg.out->string() << '\n';
      return kExitUsage;
    }
  } else {
    out << buffer.str();
  }
  return code;
}

struct VerifyTotals {
  std::size_t shapes = 0;
  std::size_t max_occupancy = 0;
  MismatchReport report;
};

void verify_one(const ConvexPolygon& polygon, std::span<const Point2> points,
                const RunConfig& cfg, VerifyTotals& totals) {
  const auto locators = standard_locators(polygon, cfg.n_slabs);
  totals.report.merge(compare_methods(polygon, points, locators));
  const auto polar = PolarIndex2::build(polygon, {cfg.n_slabs, std::nullopt});
  totals.max_occupancy = std::max(totals.max_occupancy, polar.max_occupancy());
  ++totals.shapes;
}

void verify_one(const ConvexPolyhedron& polyhedron, std::span<const Point3> points,
                const RunConfig& cfg, VerifyTotals& totals) {
  const auto locators = standard_locators(polyhedron, cfg.resolution);
  totals.report.merge(compare_methods(polyhedron, points, locators));
  const auto cubemap = CubeMapIndex3::build(polyhedron, {cfg.resolution, std::nullopt});
  totals.max_occupancy = std::max(totals.max_occupancy, cubemap.max_occupancy());
  ++totals.shapes;
}

void print_totals(std::ostream& out, const char* label, const char* index,
                  const VerifyTotals& totals, bool verbose) {
  const MismatchReport& r = totals.report;
  out << label << ": " << totals.shapes << " shapes, " << r.points << " points, "
      << r.band_points << " in boundary band, " << r.mismatches.size() << " mismatches ("
      << index << " max occupancy " << totals.max_occupancy << ")\n";
  if (verbose || !r.ok()) out << r.summary();
}

}  // namespace

bool is_obj_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".obj";
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("gen", cfg, out, err, [&](std::ostream& o) {
    switch (cfg.gen_kind) {
      case GenKind::Polygon: {
        GenSpec2 spec;
        spec.n = cfg.n;
        spec.seed = cfg.seed;
        spec.semi_axis_a = cfg.axes[0];
        spec.semi_axis_b = cfg.axes[1];
        spec.rotation = cfg.rotation;
        spec.regular = cfg.regular;
        write_polygon(o, gen_convex_polygon(spec));
        break;
      }
      case GenKind::Icosphere: {
        GenSpec3 spec{cfg.level, cfg.seed, Affine3::identity()};
        if (cfg.random_affine) spec.affine.reset();
        write_obj(o, gen_convex_polyhedron(spec));
        break;
      }
      case GenKind::Points: {
        if (cfg.shapes.empty()) throw std::invalid_argument("--points needs --shape");
        const QuerySpec spec{cfg.m, cfg.seed, cfg.inflation};
        const Shape shape = load_shape(cfg.shapes.front());
        if (const auto* polygon = std::get_if<ConvexPolygon>(&shape)) {
          write_points(o, gen_query_points(polygon->aabb(), spec));
        } else {
          write_points(o, gen_query_points(std::get<ConvexPolyhedron>(shape).aabb(), spec));
        }
        break;
      }
    }
    return kExitOk;
  });
}

int cmd_locate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("locate", cfg, out, err, [&](std::ostream& o) {
    if (cfg.shapes.empty() || !cfg.points) {
      throw std::invalid_argument("locate needs --shape and --points");
    }
    const Shape shape = load_shape(cfg.shapes.front());
    auto emit = [&o](std::size_t k, Containment c) { o << k << ' ' << to_string(c) << '\n'; };
    if (const auto* polygon = std::get_if<ConvexPolygon>(&shape)) {
      const auto locate = make_locator(*polygon, cfg.method, cfg.n_slabs);
      const auto points = parse_points2_file(*cfg.points);
      for (std::size_t k = 0; k < points.size(); ++k) emit(k, locate(points[k]));
    } else {
      const auto locate =
          make_locator(std::get<ConvexPolyhedron>(shape), cfg.method, cfg.resolution);
      const auto points = parse_points3_file(*cfg.points);
      for (std::size_t k = 0; k < points.size(); ++k) emit(k, locate(points[k]));
    }
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("verify", cfg, out, err, [&](std::ostream& o) {
    const auto start = std::chrono::steady_clock::now();
    VerifyTotals totals2;
    VerifyTotals totals3;

    if (cfg.shapes.empty()) {
      for (const GenSpec2& spec : default_polygon_corpus()) {
        const ConvexPolygon polygon = gen_convex_polygon(spec);
        const auto points =
            gen_query_points(polygon.aabb(), {cfg.m, spec.seed + cfg.seed, cfg.inflation});
        verify_one(polygon, points, cfg, totals2);
      }
      for (const GenSpec3& spec : default_polyhedron_corpus()) {
        const ConvexPolyhedron polyhedron = gen_convex_polyhedron(spec);
        const auto points =
            gen_query_points(polyhedron.aabb(), {cfg.m, spec.seed + cfg.seed, cfg.inflation});
        verify_one(polyhedron, points, cfg, totals3);
      }
    } else {
      if (cfg.points && cfg.shapes.size() != 1) {
        throw std::invalid_argument("--points needs exactly one --shape");
      }
      for (const auto& path : cfg.shapes) {
        const Shape shape = load_shape(path);
        if (const auto* polygon = std::get_if<ConvexPolygon>(&shape)) {
          const auto points = cfg.points ? parse_points2_file(*cfg.points)
                                         : gen_query_points(polygon->aabb(),
                                                            {cfg.m, cfg.seed, cfg.inflation});
          verify_one(*polygon, points, cfg, totals2);
        } else {
          const auto& polyhedron = std::get<ConvexPolyhedron>(shape);
          const auto points = cfg.points ? parse_points3_file(*cfg.points)
                                         : gen_query_points(polyhedron.aabb(),
                                                            {cfg.m, cfg.seed, cfg.inflation});
          verify_one(polyhedron, points, cfg, totals3);
        }
      }
    }

    if (totals2.shapes) print_totals(o, "2d", "polar", totals2, cfg.verbose);
    if (totals3.shapes) print_totals(o, "3d", "cubemap", totals3, cfg.verbose);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", elapsed.count());
    const bool ok = totals2.report.ok() && totals3.report.ok();
    o << (ok ? "OK" : "MISMATCH") << " in " << buf << " s\n";
    return ok ? kExitOk : kExitMismatch;
  });
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded("bench", cfg, out, err, [&](std::ostream& o) {
    if (cfg.dim != 2 && cfg.dim != 3) throw std::invalid_argument("--dim must be 2 or 3");
    const bool planar = cfg.dim == 2;
    std::vector<std::string> methods = cfg.methods;
    if (methods.empty()) methods = {"linear", planar ? "polar" : "cubemap"};
    for (const auto& m : methods) {
      if (planar ? !is_method_2d(m) : !is_method_3d(m)) {
        throw std::invalid_argument("method '" + m + "' does not apply to dimension " +
                                    std::to_string(cfg.dim));
      }
    }
    std::vector<std::size_t> sizes = cfg.sizes;
    if (sizes.empty()) sizes = planar ? std::vector<std::size_t>{64, 65536} : std::vector<std::size_t>{0, 4};
    std::vector<std::size_t> counts = cfg.query_counts;
    if (counts.empty()) counts = {100000};
    if (cfg.reps == 0) throw std::invalid_argument("--reps must be positive");

    o << kCsvHeader << '\n';
    for (std::size_t size : sizes) {
      if (planar) {
        const ConvexPolygon polygon = bench_shape_2d(size, cfg.seed);
        BenchOptions options{cfg.reps, cfg.warmup, cfg.n_slabs, cfg.resolution};
        if (cfg.slabs_per_edge) options.n_slabs = *cfg.slabs_per_edge * polygon.size();
        for (std::size_t m : counts) {
          const auto queries = gen_query_points(polygon.aabb(), {m, cfg.seed + 1, cfg.inflation});
          for (const auto& method : methods) {
            write_csv_row(o, bench_polygon(method, polygon, queries, options));
          }
        }
      } else {
        const ConvexPolyhedron polyhedron = bench_shape_3d(static_cast<int>(size), cfg.seed);
        const BenchOptions options{cfg.reps, cfg.warmup, cfg.n_slabs, cfg.resolution};
        for (std::size_t m : counts) {
          const auto queries =
              gen_query_points(polyhedron.aabb(), {m, cfg.seed + 1, cfg.inflation});
          for (const auto& method : methods) {
            write_csv_row(o, bench_polyhedron(method, polyhedron, queries, options));
          }
        }
      }
    }
    return kExitOk;
  });
}

}  // namespace cvxloc::tools
