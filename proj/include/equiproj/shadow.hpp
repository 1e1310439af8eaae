#pragma once

// Projection-sampling shadow oracle.
//
// For a view direction d (not parallel to any face plane) the shadow of a
// convex polyhedron is a convex polygon.  Its corner count is measured two
// independent ways and cross-checked on every call:
//   1. project all vertices into the plane orthogonal to d and count the
//      corners of the 2D convex hull (collinear points merged), and
//   2. count silhouette edges: edges whose two incident face normals take
//      opposite signs against d.
// A disagreement raises GeomError; agreement is also what ties the sampled
// oracle to the combinatorial decision procedure in tests.
//
// measure_k() samples seeded deterministic directions (splitmix64 +
// rejection sampling in the unit ball), skips degenerate draws, and reports
// either the constant corner count k or a witness pair of directions with
// different counts.

#include <string>
#include <vector>

#include "equiproj/core.hpp"
#include "equiproj/hull.hpp"
#include "equiproj/polyhedron.hpp"

namespace equiproj {

inline constexpr std::uint64_t kShadowSeed = 12345;
inline constexpr int kShadowSamples = 1000;

// True when d is within the angular threshold of some face plane, i.e. the
// projection direction nearly grazes a face and the shadow boundary is not
// in general position.
inline bool is_degenerate_direction(const Polyhedron& p, const Vec3& d,
                                    Scalar eps = kDegenerateDirEps) {
  Vec3 u = normalized(d);
  for (int f = 0; f < static_cast<int>(p.face_count()); ++f)
    if (std::abs(dot(p.face_normal(f), u)) < eps) return true;
  return false;
}

// Corner count of the shadow via 2D hull of the projected vertices.
inline int shadow_corners_by_hull(const Polyhedron& p, const Vec3& d) {
  Vec3 w = normalized(d);
  auto [u, v] = plane_basis(w);
  std::vector<Vec2> pts;
  pts.reserve(p.vertex_count());
  for (const Vec3& x : p.vertices()) pts.push_back({dot(u, x), dot(v, x)});
  return static_cast<int>(hull2d(pts).size());
}

// Corner count of the shadow via silhouette edges: an edge lies on the
// shadow boundary exactly when d sees one of its faces and not the other.
inline int shadow_corners_by_silhouette(const Polyhedron& p, const Vec3& d) {
  Vec3 u = normalized(d);
  int count = 0;
  for (const Edge& e : p.edges())
    if (dot(p.face_normal(e.left), u) * dot(p.face_normal(e.right), u) < 0)
      ++count;
  return count;
}

// Cross-checked shadow corner count.  Requires a non-degenerate direction.
inline int silhouette_count(const Polyhedron& p, const Vec3& d) {
  if (is_degenerate_direction(p, d))
    throw DegenerateDirectionError(
        "view direction is (nearly) parallel to a face plane");
  int by_hull = shadow_corners_by_hull(p, d);
  int by_sil = shadow_corners_by_silhouette(p, d);
  if (by_hull != by_sil)
    throw GeomError("shadow oracles disagree: hull says " +
                    std::to_string(by_hull) + ", silhouette says " +
                    std::to_string(by_sil));
  return by_sil;
}

// n accepted (non-degenerate) deterministic sample directions.
inline std::vector<Vec3> sample_directions(const Polyhedron& p,
                                           int n = kShadowSamples,
                                           std::uint64_t seed = kShadowSeed) {
  SplitMix64 rng(seed);
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<size_t>(n));
  long attempts = 0;
  const long max_attempts = 1000L * n;
  while (static_cast<int>(dirs.size()) < n) {
    if (++attempts > max_attempts)
      throw GeomError("sample_directions: too many degenerate draws");
    Vec3 d = random_unit_vector(rng);
    if (!is_degenerate_direction(p, d)) dirs.push_back(d);
  }
  return dirs;
}

struct ShadowReport {
  int samples = 0;
  bool constant = false;
  int k = 0;            // valid when constant
  Vec3 witness_a, witness_b;  // valid when !constant
  int count_a = 0, count_b = 0;
};

// Sample the shadow corner count over n seeded directions.  Returns the
// constant k, or the first witness pair of directions whose counts differ.
inline ShadowReport measure_k(const Polyhedron& p, int n = kShadowSamples,
                              std::uint64_t seed = kShadowSeed) {
  ShadowReport r;
  Vec3 first_dir;
  for (const Vec3& d : sample_directions(p, n, seed)) {
    int c = silhouette_count(p, d);
    if (r.samples == 0) {
      r.k = c;
      first_dir = d;
    } else if (c != r.k) {
      r.constant = false;
      r.witness_a = first_dir;
      r.count_a = r.k;
      r.witness_b = d;
      r.count_b = c;
      r.samples += 1;
      return r;
    }
    r.samples += 1;
  }
  r.constant = true;
  return r;
}

}  // namespace equiproj
