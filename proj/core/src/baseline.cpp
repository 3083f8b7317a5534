#include "cvxloc/baseline.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace cvxloc {

namespace {

constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

void count(QueryStats* stats, std::size_t evaluations) {
  if (stats) stats->evaluations += evaluations;
}

// Lays out per-slab edge lists in compressed form from (first, last) slab
// ranges; offsets has slab_count + 1 entries.
void fill_compressed(std::size_t slab_count,
                     const std::vector<std::pair<std::uint32_t, std::pair<std::size_t, std::size_t>>>& spans,
                     std::vector<std::uint32_t>& offsets, std::vector<std::uint32_t>& items) {
  offsets.assign(slab_count + 1, 0);
  std::vector<std::int64_t> delta(slab_count + 1, 0);
  for (const auto& [edge, range] : spans) {
    ++delta[range.first];
    --delta[range.second + 1];
  }
  std::int64_t running = 0;
  for (std::size_t s = 0; s < slab_count; ++s) {
    running += delta[s];
    offsets[s + 1] = offsets[s] + static_cast<std::uint32_t>(running);
  }
  items.assign(offsets[slab_count], 0);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [edge, range] : spans) {
    for (std::size_t s = range.first; s <= range.second; ++s) items[cursor[s]++] = edge;
  }
}

}  // namespace

Scalar min_signed_distance(const ConvexPolygon& polygon, Point2 p) {
  Scalar best = kInf;
  for (const HalfPlane2& h : polygon.halfplanes()) best = std::min(best, eval(h, p));
  return best;
}

Scalar min_signed_distance(const ConvexPolyhedron& polyhedron, Point3 p) {
  Scalar best = kInf;
  for (const HalfSpace3& h : polyhedron.halfspaces()) best = std::min(best, eval(h, p));
  return best;
}

Containment locate_linear_2d(const ConvexPolygon& polygon, Point2 p, QueryStats* stats) {
  count(stats, polygon.size());
  return classify(min_signed_distance(polygon, p), polygon.tolerances().eps_q);
}

Containment locate_linear_3d(const ConvexPolyhedron& polyhedron, Point3 p, QueryStats* stats) {
  count(stats, polyhedron.size());
  return classify(min_signed_distance(polyhedron, p), polyhedron.tolerances().eps_q);
}

// ---------------------------------------------------------------------------
// Wedge bisection

WedgeIndex2 WedgeIndex2::build(const ConvexPolygon& polygon) {
  WedgeIndex2 idx;
  const auto v = polygon.vertices();
  idx.apex_ = v[0];
  idx.tol_ = polygon.tolerances();
  idx.edges_.assign(polygon.halfplanes().begin(), polygon.halfplanes().end());
  idx.rays_.resize(v.size());
  for (std::size_t k = 1; k < v.size(); ++k) {
    idx.rays_[k] = halfplane_from_edge(v[0], v[k], idx.tol_.eps_len);
  }
  return idx;
}

Containment WedgeIndex2::locate(Point2 p, QueryStats* stats) const {
  const Scalar eps_q = tol_.eps_q;
  if (norm(p - apex_) <= eps_q) return Containment::OnBoundary;

  // G_1 is also the line of edge 0; failing it puts p behind the opening
  // wedge.
  const Scalar g_first = eval(rays_[1], p);
  if (g_first < -eps_q) {
    count(stats, 1);
    return Containment::Outside;
  }

  // Largest k in [1, N-1] with G_k(p) >= 0, in exactly ceil(log2(N-1))
  // probes. G_{N-1} is the reversed line of edge N-1.
  const std::size_t n = edges_.size();
  std::size_t base = 1;
  std::size_t len = n - 1;
  std::size_t steps = 0;
  Scalar g_last = kInf;
  while (len > 1) {
    const std::size_t half = len / 2;
    const std::size_t mid = base + half;
    const Scalar g = eval(rays_[mid], p);
    ++steps;
    if (mid == n - 1) g_last = g;
    if (g >= 0) base = mid;
    len -= half;
  }

  // p lies in triangle (v0, v_k, v_{k+1}); on or past the last ray it is
  // tested against the last triangle.
  const std::size_t k = std::min(base, n - 2);
  Scalar best = eval(edges_[k], p);
  if (k == 1) best = std::min(best, g_first);
  if (k == n - 2) best = std::min(best, -g_last);
  if (stats) {
    stats->evaluations += steps + 2;
    stats->bisection_steps += steps;
  }
  return classify(best, eps_q);
}

// ---------------------------------------------------------------------------
// Sorted slabs

SortedSlabIndex2 SortedSlabIndex2::build(const ConvexPolygon& polygon) {
  SortedSlabIndex2 idx;
  idx.tol_ = polygon.tolerances();
  idx.halfplanes_.assign(polygon.halfplanes().begin(), polygon.halfplanes().end());
  const auto v = polygon.vertices();
  const std::size_t n = v.size();

  idx.levels_.reserve(n);
  for (const Point2& p : v) idx.levels_.push_back(p.y);
  std::sort(idx.levels_.begin(), idx.levels_.end());
  idx.levels_.erase(std::unique(idx.levels_.begin(), idx.levels_.end()), idx.levels_.end());

  const std::size_t slabs = idx.levels_.size() - 1;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  idx.left_.assign(slabs, kUnset);
  idx.right_.assign(slabs, kUnset);
  auto level_of = [&](Scalar y) {
    return static_cast<std::size_t>(
        std::lower_bound(idx.levels_.begin(), idx.levels_.end(), y) - idx.levels_.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar ya = v[i].y;
    const Scalar yb = v[(i + 1) % n].y;
    const auto edge = static_cast<std::uint32_t>(i);
    if (ya == yb) {
      (ya == idx.levels_.front() ? idx.bottom_ : idx.top_) = edge;
      continue;
    }
    auto& side = yb < ya ? idx.left_ : idx.right_;
    for (std::size_t s = level_of(std::min(ya, yb)); s < level_of(std::max(ya, yb)); ++s) {
      side[s] = edge;
    }
  }
  assert(std::find(idx.left_.begin(), idx.left_.end(), kUnset) == idx.left_.end());
  assert(std::find(idx.right_.begin(), idx.right_.end(), kUnset) == idx.right_.end());
  return idx;
}

Containment SortedSlabIndex2::locate(Point2 p, QueryStats* stats) const {
  const Scalar eps_q = tol_.eps_q;
  const Scalar y_min = levels_.front();
  const Scalar y_max = levels_.back();
  if (p.y < y_min - eps_q || p.y > y_max + eps_q) return Containment::Outside;

  auto it = std::upper_bound(levels_.begin(), levels_.end(), p.y);
  std::size_t slab = it == levels_.begin() ? 0 : static_cast<std::size_t>(it - levels_.begin()) - 1;
  slab = std::min(slab, left_.size() - 1);

  std::size_t evals = 2;
  Scalar best = std::min(eval(halfplanes_[left_[slab]], p), eval(halfplanes_[right_[slab]], p));
  if (bottom_ && p.y <= y_min + eps_q) {
    ++evals;
    best = std::min(best, eval(halfplanes_[*bottom_], p));
  }
  if (top_ && p.y >= y_max - eps_q) {
    ++evals;
    best = std::min(best, eval(halfplanes_[*top_], p));
  }
  count(stats, evals);
  return classify(best, eps_q);
}

// ---------------------------------------------------------------------------
// Uniform slabs

UniformSlabIndex2 UniformSlabIndex2::build(const ConvexPolygon& polygon,
                                           std::optional<std::size_t> n_slabs) {
  UniformSlabIndex2 idx;
  idx.tol_ = polygon.tolerances();
  idx.halfplanes_.assign(polygon.halfplanes().begin(), polygon.halfplanes().end());
  idx.y_min_ = polygon.aabb().min.y;
  idx.y_max_ = polygon.aabb().max.y;
  const Scalar range = idx.y_max_ - idx.y_min_;
  const auto v = polygon.vertices();
  const std::size_t n = v.size();

  if (n_slabs) {
    if (*n_slabs == 0) throw GeometryError(ErrorKind::InvalidArgument, "n_slabs must be positive");
    idx.n_slabs_ = *n_slabs;
  } else {
    std::vector<Scalar> ys;
    ys.reserve(n);
    for (const Point2& p : v) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    Scalar min_gap = kInf;
    for (std::size_t i = 1; i < ys.size(); ++i) {
      if (ys[i] > ys[i - 1]) min_gap = std::min(min_gap, ys[i] - ys[i - 1]);
    }
    const Scalar wanted = std::ceil(range / min_gap);
    idx.cap_exceeded_ = !(wanted <= static_cast<Scalar>(kMaxSlabs));
    idx.n_slabs_ = idx.cap_exceeded_ ? kMaxSlabs
                                     : std::max(n, static_cast<std::size_t>(wanted));
    idx.n_slabs_ = std::min(idx.n_slabs_, kMaxSlabs);
  }
  idx.scale_ = static_cast<Scalar>(idx.n_slabs_) / range;

  using Span = std::pair<std::uint32_t, std::pair<std::size_t, std::size_t>>;
  std::vector<Span> left_spans;
  std::vector<Span> right_spans;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar ya = v[i].y;
    const Scalar yb = v[(i + 1) % n].y;
    const auto edge = static_cast<std::uint32_t>(i);
    if (ya == yb) {
      idx.horizontal_.push_back({idx.slab_of(ya), edge});
      continue;
    }
    const Span span{edge, {idx.slab_of(std::min(ya, yb)), idx.slab_of(std::max(ya, yb))}};
    (yb < ya ? left_spans : right_spans).push_back(span);
  }
  fill_compressed(idx.n_slabs_, left_spans, idx.left_offsets_, idx.left_);
  fill_compressed(idx.n_slabs_, right_spans, idx.right_offsets_, idx.right_);

  for (std::size_t s = 0; s < idx.n_slabs_; ++s) {
    idx.max_occupancy_ = std::max<std::size_t>(
        idx.max_occupancy_, idx.left_edges(s).size() + idx.right_edges(s).size() +
                                idx.horizontal_edges(s).size());
  }
  return idx;
}

std::size_t UniformSlabIndex2::slab_of(Scalar y) const {
  const Scalar t = std::floor((y - y_min_) * scale_);
  if (!(t > 0)) return 0;
  const auto s = static_cast<std::size_t>(std::min(t, static_cast<Scalar>(n_slabs_ - 1)));
  return s;
}

std::span<const std::uint32_t> UniformSlabIndex2::left_edges(std::size_t slab) const {
  return std::span(left_).subspan(left_offsets_[slab], left_offsets_[slab + 1] - left_offsets_[slab]);
}

std::span<const std::uint32_t> UniformSlabIndex2::right_edges(std::size_t slab) const {
  return std::span(right_).subspan(right_offsets_[slab],
                                   right_offsets_[slab + 1] - right_offsets_[slab]);
}

std::vector<std::uint32_t> UniformSlabIndex2::horizontal_edges(std::size_t slab) const {
  std::vector<std::uint32_t> out;
  for (const Horizontal& h : horizontal_) {
    if (h.slab == slab) out.push_back(h.edge);
  }
  return out;
}

Containment UniformSlabIndex2::locate(Point2 p, QueryStats* stats) const {
  const Scalar eps_q = tol_.eps_q;
  if (p.y < y_min_ - eps_q || p.y > y_max_ + eps_q) return Containment::Outside;
  const std::size_t slab = slab_of(p.y);

  Scalar best = kInf;
  std::size_t evals = 0;
  auto visit = [&](std::uint32_t edge) {
    ++evals;
    best = std::min(best, eval(halfplanes_[edge], p));
    return best < -eps_q;
  };
  bool outside = false;
  for (std::uint32_t e : left_edges(slab)) {
    if ((outside = visit(e))) break;
  }
  if (!outside) {
    for (std::uint32_t e : right_edges(slab)) {
      if ((outside = visit(e))) break;
    }
  }
  if (!outside) {
    for (const Horizontal& h : horizontal_) {
      if (h.slab == slab && (outside = visit(h.edge))) break;
    }
  }
  count(stats, evals);
  return outside ? Containment::Outside : classify(best, eps_q);
}

}  // namespace cvxloc
