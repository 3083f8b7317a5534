#pragma once

// Subcommands of the cvxloc tool. Each returns the process exit code:
// 0 success, 1 verification mismatch, 2 usage, parse or validation error.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cvxloc::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class GenKind { Polygon, Icosphere, Points };

struct RunConfig {
  // Shape files; locate uses the first, verify all of them (the default
  // corpus when empty), gen --points the first.
  std::vector<std::filesystem::path> shapes;
  std::optional<std::filesystem::path> points;
  // Empty selects polar for polygons and cubemap for polyhedra.
  std::string method;
  std::optional<std::size_t> n_slabs;
  std::optional<std::uint32_t> resolution;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> out;  // stdout when absent

  // gen
  GenKind gen_kind = GenKind::Polygon;
  std::size_t n = 8;
  std::array<double, 2> axes{1, 1};
  double rotation = 0;
  bool regular = false;
  int level = 0;
  bool random_affine = false;
  std::size_t m = 1000;
  double inflation = 1.5;

  // verify
  bool verbose = false;

  // bench
  int dim = 2;
  std::vector<std::string> methods;      // default linear plus the O(1) method
  std::vector<std::size_t> sizes;        // N (dim 2) or icosphere levels (dim 3)
  std::vector<std::size_t> query_counts;
  std::size_t reps = 5;
  std::size_t warmup = 1;
  // n_slabs = slabs_per_edge * N, for build-time sweeps.
  std::optional<std::size_t> slabs_per_edge;
};

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_locate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// True for paths ending in .obj (any case).
bool is_obj_path(const std::filesystem::path& path);

}  // namespace cvxloc::tools
