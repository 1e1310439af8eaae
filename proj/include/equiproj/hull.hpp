#pragma once

// Convex hull machinery:
//   * hull2d       — monotone chain, collinear points merged away
//   * hull3d       — incremental hull, coplanar triangles merged into
//                    polygonal faces wound CCW as seen from outside
//   * halfspace_intersection — bounded intersection of closed half-spaces,
//                    faces labeled with the index of their source plane
//
// hull3d tolerates coplanar, on-edge and duplicate input points: duplicates
// are deduplicated up front, points landing on existing hull edges or faces
// are absorbed by treating coplanarity as visibility, and the resulting flat
// triangle fans are flattened by the plane-merge pass.  Structural
// invariants (paired directed edges, simple face cycles, Euler formula) are
// re-checked at the end; violation raises GeomError.

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "equiproj/core.hpp"

namespace equiproj {

// ---------------------------------------------------------------------------
// 2D support

struct Vec2 {
  Scalar x = 0, y = 0;
  Vec2() = default;
  Vec2(Scalar x, Scalar y) : x(x), y(y) {}
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
};

// z-component of (b-a) x (c-a); positive when a,b,c make a left turn.
inline Scalar cross2(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Orthonormal in-plane basis (u, v) for the plane normal to unit vector w,
// chosen deterministically so projections are reproducible.
inline std::pair<Vec3, Vec3> plane_basis(const Vec3& w) {
  Vec3 axis =
      (std::abs(w.x) <= std::abs(w.y) && std::abs(w.x) <= std::abs(w.z))
          ? Vec3{1, 0, 0}
          : (std::abs(w.y) <= std::abs(w.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
  Vec3 u = normalized(cross(w, axis));
  Vec3 v = cross(w, u);
  return {u, v};
}

// Convex hull of a 2D point set, counter-clockwise, with duplicate points
// and collinear non-corner points removed.  Tolerances scale with the
// bounding-box diagonal.  Degenerate inputs yield hulls of size < 3.
inline std::vector<Vec2> hull2d(std::vector<Vec2> pts, Scalar eps_rel = kEps) {
  if (pts.empty()) return {};
  Scalar xmin = pts[0].x, xmax = xmin, ymin = pts[0].y, ymax = ymin;
  for (const Vec2& p : pts) {
    xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
  }
  const Scalar diag = std::max(
      1.0, std::hypot(xmax - xmin, ymax - ymin));
  const Scalar tol = eps_rel * diag;        // point coincidence
  const Scalar tol2 = eps_rel * diag * diag;  // doubled triangle area

  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Vec2> uniq;
  for (const Vec2& p : pts) {
    bool dup = false;
    for (const Vec2& q : uniq)
      if (std::hypot(p.x - q.x, p.y - q.y) < tol) { dup = true; break; }
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() < 3) return uniq;

  // Monotone chain; popping on cross <= tol2 discards collinear midpoints.
  auto build = [&](auto begin, auto end) {
    std::vector<Vec2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross2(chain[chain.size() - 2], chain.back(), *it) <= tol2)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Vec2> lower = build(uniq.begin(), uniq.end());
  std::vector<Vec2> upper = build(uniq.rbegin(), uniq.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

// ---------------------------------------------------------------------------
// 3D hull

struct HullMesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;  // vertex loops, CCW from outside
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Tri {
  int a, b, c;
  Vec3 normal;     // unit
  Scalar offset;   // dot(normal, any vertex)
  bool alive = true;
};

inline Tri make_tri(const std::vector<Vec3>& pts, int a, int b, int c) {
  Tri t{a, b, c, {}, 0, true};
  Vec3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
  Scalar len = norm(n);
  if (len < 1e-30) throw GeomError("degenerate hull triangle");
  t.normal = n / len;
  t.offset = dot(t.normal, pts[a]);
  return t;
}

}  // namespace detail

// Convex hull of a 3D point set with polygonal (merged-coplanar) faces.
// merge_eps is relative to the bounding-box diagonal and governs both point
// deduplication and the coplanarity threshold for face merging.  Throws
// GeomError if the points are affinely degenerate (flat or lower
// dimensional) or if internal consistency checks fail.
inline HullMesh hull3d(const std::vector<Vec3>& input, Scalar merge_eps = 1e-7) {
  if (input.size() < 4) throw GeomError("hull3d: need at least 4 points");

  Vec3 lo = input[0], hi = input[0];
  for (const Vec3& p : input) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const Scalar diag = std::max(1e-12, norm(hi - lo));
  const Scalar dedupe_tol = merge_eps * diag;
  const Scalar vis_eps = kEps * diag;     // strict-visibility fuzz
  const Scalar flat_tol = merge_eps * diag;  // coplanarity for merging

  // Deduplicate, then insert far-from-center points first: extreme points
  // build a fat hull early so later coplanar/interior points are absorbed
  // instead of creating ambiguous visibility cases.
  std::vector<Vec3> pts;
  for (const Vec3& p : input) {
    bool dup = false;
    for (const Vec3& q : pts)
      if (distance(p, q) < dedupe_tol) { dup = true; break; }
    if (!dup) pts.push_back(p);
  }
  if (pts.size() < 4) throw GeomError("hull3d: degenerate point set");
  Vec3 center{0, 0, 0};
  for (const Vec3& p : pts) center += p;
  center = center / static_cast<Scalar>(pts.size());
  std::stable_sort(pts.begin(), pts.end(), [&](const Vec3& a, const Vec3& b) {
    return norm2(a - center) > norm2(b - center);
  });

  // Initial simplex: four affinely independent points.
  const int n = static_cast<int>(pts.size());
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n; ++i)
    if (distance(pts[i], pts[0]) > dedupe_tol) { i1 = i; break; }
  if (i1 < 0) throw GeomError("hull3d: degenerate point set");
  Vec3 d01 = pts[i1] - pts[0];
  for (int i = 1; i < n; ++i) {
    if (i == i1) continue;
    if (norm(cross(d01, pts[i] - pts[0])) / norm(d01) > dedupe_tol) {
      i2 = i;
      break;
    }
  }
  if (i2 < 0) throw GeomError("hull3d: collinear point set");
  Vec3 nrm = normalized(cross(d01, pts[i2] - pts[0]));
  for (int i = 1; i < n; ++i) {
    if (i == i1 || i == i2) continue;
    if (std::abs(dot(nrm, pts[i] - pts[0])) > dedupe_tol) { i3 = i; break; }
  }
  if (i3 < 0) throw GeomError("hull3d: coplanar point set");
  if (dot(nrm, pts[i3] - pts[0]) > 0) std::swap(i1, i2);

  std::vector<detail::Tri> tris;
  tris.push_back(detail::make_tri(pts, 0, i1, i2));
  tris.push_back(detail::make_tri(pts, 0, i3, i1));
  tris.push_back(detail::make_tri(pts, i1, i3, i2));
  tris.push_back(detail::make_tri(pts, i2, i3, 0));

  // Incremental insertion.  A face counts as visible when the point is on
  // or above its plane (signed distance > -vis_eps); treating coplanar
  // points as visible lets them extend existing faces, and guarantees the
  // fan triangles built on the horizon are never degenerate.
  for (int pi = 0; pi < n; ++pi) {
    if (pi == 0 || pi == i1 || pi == i2 || pi == i3) continue;
    const Vec3& p = pts[pi];
    std::vector<int> visible;
    bool strictly_outside = false;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      Scalar d = dot(tris[t].normal, p) - tris[t].offset;
      if (d > -vis_eps) {
        visible.push_back(t);
        if (d > vis_eps) strictly_outside = true;
      }
    }
    if (!strictly_outside) continue;  // inside, or merely on the surface

    std::map<std::pair<int, int>, bool> vis_edges;
    for (int t : visible) {
      const detail::Tri& tr = tris[t];
      vis_edges[{tr.a, tr.b}] = true;
      vis_edges[{tr.b, tr.c}] = true;
      vis_edges[{tr.c, tr.a}] = true;
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [e, _] : vis_edges)
      if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
    if (horizon.empty())
      throw GeomError("hull3d: empty horizon (inconsistent visibility)");
    for (int t : visible) tris[t].alive = false;
    for (const auto& [u, v] : horizon)
      tris.push_back(detail::make_tri(pts, u, v, pi));
  }

  // Check the triangulation is watertight: every directed edge paired.
  std::map<std::pair<int, int>, int> owner;
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    if (!tris[t].alive) continue;
    const detail::Tri& tr = tris[t];
    for (auto [u, v] : {std::pair{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}}) {
      if (!owner.emplace(std::pair{u, v}, t).second)
        throw GeomError("hull3d: duplicate directed edge");
    }
  }
  for (const auto& [e, t] : owner)
    if (!owner.count({e.second, e.first}))
      throw GeomError("hull3d: unpaired directed edge");

  // Merge coplanar adjacent triangles with union-find.
  detail::UnionFind uf(static_cast<int>(tris.size()));
  auto coplanar = [&](const detail::Tri& s, const detail::Tri& t) {
    for (int v : {t.a, t.b, t.c})
      if (std::abs(dot(s.normal, pts[v]) - s.offset) > flat_tol) return false;
    for (int v : {s.a, s.b, s.c})
      if (std::abs(dot(t.normal, pts[v]) - t.offset) > flat_tol) return false;
    return same_direction(s.normal, t.normal, 1e-4);
  };
  for (const auto& [e, t] : owner) {
    int s = owner.at({e.second, e.first});
    if (t < s && coplanar(tris[t], tris[s])) uf.unite(t, s);
  }

  // Walk each group's boundary (directed edges whose twin lies in another
  // group) into a single CCW cycle, then drop collinear midpoints.
  std::map<int, std::vector<std::pair<int, int>>> group_edges;
  for (const auto& [e, t] : owner) {
    int s = owner.at({e.second, e.first});
    if (uf.find(t) != uf.find(s)) group_edges[uf.find(t)].push_back(e);
  }
  if (group_edges.size() < 4)
    throw GeomError("hull3d: fewer than four faces after merging");

  HullMesh out;
  std::vector<int> remap(n, -1);
  std::vector<std::vector<int>> loops;
  for (auto& [g, edges] : group_edges) {
    std::map<int, int> next;
    int start = edges[0].first;
    for (const auto& [u, v] : edges) {
      if (!next.emplace(u, v).second)
        throw GeomError("hull3d: face boundary is not a simple cycle");
      start = std::min(start, u);
    }
    std::vector<int> loop;
    int cur = start;
    do {
      loop.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end())
        throw GeomError("hull3d: face boundary walk broke");
      cur = it->second;
    } while (cur != start && loop.size() <= edges.size());
    if (loop.size() != edges.size())
      throw GeomError("hull3d: face boundary is not a single cycle");

    // Remove vertices lying on the segment between their neighbours.
    bool changed = true;
    while (changed && loop.size() > 3) {
      changed = false;
      for (size_t i = 0; i < loop.size(); ++i) {
        const Vec3& a = pts[loop[(i + loop.size() - 1) % loop.size()]];
        const Vec3& b = pts[loop[i]];
        const Vec3& c = pts[loop[(i + 1) % loop.size()]];
        Vec3 ac = c - a;
        Scalar len = norm(ac);
        if (len < dedupe_tol ||
            norm(cross(ac / len, b - a)) < flat_tol) {
          loop.erase(loop.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    if (loop.size() < 3) throw GeomError("hull3d: degenerate merged face");
    loops.push_back(std::move(loop));
  }

  for (const auto& loop : loops)
    for (int v : loop)
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(pts[v]);
      }
  for (auto& loop : loops) {
    std::vector<int> f;
    f.reserve(loop.size());
    for (int v : loop) f.push_back(remap[v]);
    out.faces.push_back(std::move(f));
  }

  // Euler check on the merged mesh.
  std::size_t E2 = 0;
  for (const auto& f : out.faces) E2 += f.size();
  if (E2 % 2 != 0 ||
      static_cast<long>(out.vertices.size()) - static_cast<long>(E2 / 2) +
              static_cast<long>(out.faces.size()) != 2)
    throw GeomError("hull3d: Euler characteristic violated after merging");
  return out;
}

// ---------------------------------------------------------------------------
// Halfspace intersection

struct HalfspaceCell {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;   // CCW from outside
  std::vector<int> face_planes;          // faces[i] lies in planes[face_planes[i]]
};

// Bounded intersection of closed half-spaces dot(n,x) <= offset.  Vertices
// are found by intersecting plane triples and filtering; the hull of the
// surviving points gives the cell.  Each face is labeled with the index of
// the unique input plane containing it.  Throws GeomError when the
// intersection is empty, unbounded or lower dimensional.
inline HalfspaceCell halfspace_intersection(const std::vector<Plane>& planes,
                                            Scalar merge_eps = 1e-7) {
  const int n = static_cast<int>(planes.size());
  if (n < 4) throw GeomError("halfspace_intersection: need at least 4 planes");

  std::vector<Vec3> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec3 &a = planes[i].normal, &b = planes[j].normal,
                   &c = planes[k].normal;
        Scalar det = dot(a, cross(b, c));
        if (std::abs(det) < 1e-9) continue;
        Vec3 p = (cross(b, c) * planes[i].offset +
                  cross(c, a) * planes[j].offset +
                  cross(a, b) * planes[k].offset) /
                 det;
        bool inside = true;
        Scalar tol = merge_eps * (1.0 + norm(p));
        for (int m = 0; m < n && inside; ++m)
          if (planes[m].signed_distance(p) > tol) inside = false;
        if (inside) candidates.push_back(p);
      }
  if (candidates.size() < 4)
    throw GeomError("halfspace_intersection: empty or degenerate cell");

  std::vector<Vec3> uniq;
  for (const Vec3& p : candidates) {
    bool dup = false;
    for (const Vec3& q : uniq)
      if (distance(p, q) < merge_eps * (1.0 + norm(p))) { dup = true; break; }
    if (!dup) uniq.push_back(p);
  }

  HullMesh mesh = hull3d(uniq, merge_eps);

  HalfspaceCell cell;
  cell.vertices = std::move(mesh.vertices);
  cell.faces = std::move(mesh.faces);
  Scalar scale = 1.0;
  for (const Vec3& v : cell.vertices) scale = std::max(scale, norm(v));
  for (const auto& face : cell.faces) {
    int best = -1;
    Scalar best_dev = std::numeric_limits<Scalar>::max();
    for (int i = 0; i < n; ++i) {
      Scalar dev = 0;
      for (int v : face)
        dev = std::max(dev, std::abs(planes[i].signed_distance(cell.vertices[v])));
      if (dev < best_dev) { best_dev = dev; best = i; }
    }
    if (best < 0 || best_dev > 10 * merge_eps * scale)
      throw GeomError("halfspace_intersection: face matches no input plane");
    cell.face_planes.push_back(best);
  }
  return cell;
}

}  // namespace equiproj
