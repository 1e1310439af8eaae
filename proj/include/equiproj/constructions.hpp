#pragma once

// Generators for the equiprojective families beyond the stock solids:
//
//  * equitruncated tetrahedron / pyramid / triangular cupola / pentagonal
//    rotunda -- truncation constructions realised as labelled half-space
//    intersections, so every face knows which cut produced it;
//  * half-and-reglue derivatives of the rhombic dodecahedron, the truncated
//    octahedron and the truncated cuboctahedron -- cut into halves, adjust
//    the section until it is regular enough to admit a rotation, and glue
//    the halves back together under a pinned correspondence;
//  * twisted biprisms -- two right prisms joined at right angles along a
//    congruent square side face, generalising the gyrobifastigium;
//  * a catalog of named builders together with the silhouette count each one
//    is expected to produce.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equiproj/core.hpp"
#include "equiproj/hull.hpp"
#include "equiproj/ops.hpp"
#include "equiproj/polyhedron.hpp"
#include "equiproj/solids.hpp"

namespace equiproj {

namespace detail {

// Builds the bounded cell of the given half-spaces and transfers one label
// per plane onto the faces.  Every plane must contribute a face; a redundant
// plane means the parameters do not produce the intended shape.
inline Polyhedron cell_with_labels(const std::vector<Plane>& planes,
                                   const std::vector<std::string>& labels) {
  HalfspaceCell cell = halfspace_intersection(planes);
  std::vector<bool> used(planes.size(), false);
  std::vector<std::string> face_labels;
  face_labels.reserve(cell.faces.size());
  for (int src : cell.face_planes) {
    used[static_cast<std::size_t>(src)] = true;
    face_labels.push_back(labels[static_cast<std::size_t>(src)]);
  }
  for (std::size_t i = 0; i < planes.size(); ++i) {
    if (!used[i]) {
      throw GeomError("cell_with_labels: plane '" + labels[i] +
                      "' does not contribute a face");
    }
  }
  return Polyhedron::build(std::move(cell.vertices), std::move(cell.faces),
                           std::move(face_labels));
}

// Plane through three points, oriented so `interior` lies strictly inside.
inline Plane plane_through_outward(const Vec3& a, const Vec3& b, const Vec3& c,
                                   const Vec3& interior) {
  Vec3 n = normalized(cross(b - a, c - a));
  if (dot(n, interior) > dot(n, a)) n = -n;
  return Plane{n, dot(n, a)};
}

// Shaving plane with the given normal direction.  The vertices listed in
// `removed` must be the extreme ones along the normal; the plane is placed
// `frac` of the way from them toward the next vertex layer, so exactly the
// listed vertices end up outside.
inline Plane shave_plane(const std::vector<Vec3>& verts, const Vec3& normal,
                         const std::vector<int>& removed, Scalar frac) {
  const Vec3 n = normalized(normal);
  Scalar lo_removed = 0.0;
  bool first = true;
  std::vector<bool> is_removed(verts.size(), false);
  for (int idx : removed) {
    is_removed[static_cast<std::size_t>(idx)] = true;
    const Scalar v = dot(n, verts[static_cast<std::size_t>(idx)]);
    lo_removed = first ? v : std::min(lo_removed, v);
    first = false;
  }
  Scalar next = -1e300;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!is_removed[i]) next = std::max(next, dot(n, verts[i]));
  }
  if (!(lo_removed > next)) {
    throw GeomError("shave_plane: listed vertices are not extreme");
  }
  return Plane{n, lo_removed - frac * (lo_removed - next)};
}

// Vertex truncation plane through the points at fraction `rho` along each
// edge from vertex `v` toward its neighbours (given in cyclic order; they
// are coplanar whenever the vertex figure has a mirror symmetry).
inline Plane vertex_cut_plane(const std::vector<Vec3>& verts, int v,
                              const std::vector<int>& neighbors, Scalar rho,
                              const Vec3& interior) {
  std::vector<Vec3> pts;
  pts.reserve(neighbors.size());
  const Vec3 p = verts[static_cast<std::size_t>(v)];
  for (int nb : neighbors) {
    pts.push_back(p + (verts[static_cast<std::size_t>(nb)] - p) * rho);
  }
  Vec3 n{0.0, 0.0, 0.0};  // Newell normal of the point loop
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec3& a = pts[i];
    const Vec3& b = pts[(i + 1) % pts.size()];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  n = normalized(n);
  Scalar off = 0.0;
  for (const Vec3& q : pts) off += dot(n, q);
  off /= static_cast<Scalar>(pts.size());
  if (dot(n, interior) > off) {
    n = -n;
    off = -off;
  }
  return Plane{n, off};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Equitruncated tetrahedron
// ---------------------------------------------------------------------------

// Truncates a (possibly irregular) tetrahedron into a 10-equiprojective solid
// with 11 faces.  One face is the base, the opposite vertex the apex.  A top
// cut parallel to the base trims the apex at fraction `t_top` of the height.
// Through the point at fraction `t_side` of each apex edge runs a line in the
// direction apex - base_centroid; each unordered pair of those lines supports
// a pair of parallel side cuts, parallel to the third apex edge.  The two
// cuts of a pair carry opposite outward normals, so their triangular faces
// compensate each other; top and base pair up as well.
inline Polyhedron equitruncated_tetrahedron(const Vec3& apex,
                                            const std::array<Vec3, 3>& base,
                                            Scalar t_side = 0.25,
                                            Scalar t_top = 0.75) {
  if (!(t_side > 0.0 && t_side < t_top && t_top < 1.0)) {
    throw GeomError("equitruncated_tetrahedron: need 0 < t_side < t_top < 1");
  }
  const Vec3 g = (base[0] + base[1] + base[2]) / 3.0;
  const Vec3 d = apex - g;  // direction of the side-cut lines
  const Vec3 interior = (apex + base[0] + base[1] + base[2]) / 4.0;

  std::vector<Plane> planes;
  std::vector<std::string> labels;
  planes.push_back(
      detail::plane_through_outward(base[0], base[1], base[2], interior));
  labels.emplace_back("base");
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    planes.push_back(
        detail::plane_through_outward(apex, base[j], base[k], interior));
    std::ostringstream os;
    os << "side" << i;
    labels.push_back(os.str());
  }
  {
    const Vec3 n = -planes[0].normal;
    const Vec3 q = g + d * t_top;
    planes.push_back(Plane{n, dot(n, q)});
    labels.emplace_back("top");
  }
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      if (k == i) continue;
      const Vec3 pi = base[i] + (apex - base[i]) * t_side;
      Vec3 n = normalized(cross(d, apex - base[k]));
      if (dot(n, base[i]) < dot(n, pi)) n = -n;  // corner i falls outside
      planes.push_back(Plane{n, dot(n, pi)});
      std::ostringstream os;
      os << "cut" << i << k;
      labels.push_back(os.str());
    }
  }
  return detail::cell_with_labels(planes, labels);
}

inline Polyhedron equitruncated_tetrahedron() {
  return equitruncated_tetrahedron(
      {1, 1, 1}, {{{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}});
}

// Irregular instance: the construction never uses regularity, only the cut
// lines' common direction (here apex minus base centroid).
inline Polyhedron equitruncated_tetrahedron_skew() {
  return equitruncated_tetrahedron(
      {1.2, 0.9, 2.2}, {{{0, 0, 0}, {3.0, 0.2, 0}, {1.4, 2.6, 0}}});
}

// ---------------------------------------------------------------------------
// Equitruncated pyramid
// ---------------------------------------------------------------------------

// Truncates an irregular quadrilateral pyramid into a 10-equiprojective solid
// with 10 faces.  The four apex edges split into two planar paths (each pair
// of opposite edges is coplanar with the apex).  At fraction `t_side` of each
// apex edge a side cut is applied parallel to the plane of the *other* path;
// opposite side cuts are then parallel with opposite normals.  A top cut
// parallel to the base trims the apex.
inline Polyhedron equitruncated_pyramid(const std::array<Vec3, 4>& q,
                                        const Vec3& apex,
                                        Scalar t_side = 0.25,
                                        Scalar t_top = 0.75) {
  if (!(t_side > 0.0 && t_side < t_top && t_top < 1.0)) {
    throw GeomError("equitruncated_pyramid: need 0 < t_side < t_top < 1");
  }
  const Vec3 gb = (q[0] + q[1] + q[2] + q[3]) / 4.0;
  const Vec3 interior = (gb * 4.0 + apex) / 5.0;

  std::vector<Plane> planes;
  std::vector<std::string> labels;
  const Plane base = detail::plane_through_outward(q[0], q[1], q[2], interior);
  if (std::abs(base.signed_distance(q[3])) > 1e-9) {
    throw GeomError("equitruncated_pyramid: base is not planar");
  }
  planes.push_back(base);
  labels.emplace_back("base");
  for (int i = 0; i < 4; ++i) {
    planes.push_back(
        detail::plane_through_outward(apex, q[i], q[(i + 1) % 4], interior));
    std::ostringstream os;
    os << "side" << i;
    labels.push_back(os.str());
  }
  {
    const Vec3 n = -base.normal;
    const Vec3 top_pt = gb + (apex - gb) * t_top;
    planes.push_back(Plane{n, dot(n, top_pt)});
    labels.emplace_back("top");
  }
  // Path 0 joins q0-apex-q2, path 1 joins q1-apex-q3.
  const Vec3 n_path0 = cross(apex - q[0], q[2] - q[0]);
  const Vec3 n_path1 = cross(apex - q[1], q[3] - q[1]);
  for (int i = 0; i < 4; ++i) {
    const Vec3 pi = q[i] + (apex - q[i]) * t_side;
    Vec3 n = normalized(i % 2 == 0 ? n_path1 : n_path0);
    if (dot(n, q[i]) < dot(n, pi)) n = -n;  // corner i falls outside
    planes.push_back(Plane{n, dot(n, pi)});
    std::ostringstream os;
    os << "cut" << i;
    labels.push_back(os.str());
  }
  return detail::cell_with_labels(planes, labels);
}

inline Polyhedron equitruncated_pyramid() {
  return equitruncated_pyramid(
      {{{0, 0, 0}, {3.1, 0, 0}, {3.6, 2.8, 0}, {0.4, 2.4, 0}}},
      {1.5, 1.2, 2.3});
}

// ---------------------------------------------------------------------------
// Equitruncated triangular cupola
// ---------------------------------------------------------------------------

// An 11-equiprojective truncation of the triangular cupola, expressed in
// cuboctahedron coordinates: the cupola is the half of the cuboctahedron
// hull(perms(+-1,+-1,0)) on the x+y+z >= 0 side.  Cuts:
//   top    -- shaves the top triangle at depth beta (pairs with the base),
//   cut1   -- removes the base edge toward (1,-1,-1), with the outward
//             normal opposite to face t1 (their faces compensate),
//   cut2a/b -- opposite vertex cuts at (0,1,-1) and (0,-1,1) (mutual pair),
//   cut4   -- a cut normal to (0,1,1); its face is a rectangle, which is
//             centrally symmetric and therefore compensates itself.
// The remaining faces keep opposite edge pairs parallel and need no partner.
// The parameter bounds keep each cut shallow enough not to swallow another.
inline Polyhedron equitruncated_triangular_cupola(Scalar delta = 0.5,
                                                  Scalar gamma = 0.5,
                                                  Scalar beta = 0.3,
                                                  Scalar s = 0.4) {
  const bool ok = delta > 0.0 && gamma > 0.0 && beta > 0.0 && s > 0.0 &&
                  s < 1.0 && gamma < 1.0 - delta / 2.0 && beta < 2.0 * s &&
                  gamma < 1.0 - beta / 2.0 && beta / 2.0 < 1.0 - delta / 2.0;
  if (!ok) {
    throw GeomError("equitruncated_triangular_cupola: parameters out of range");
  }
  const std::vector<Plane> planes = {
      Plane{{-1, -1, -1}, 0},          // base
      Plane{{1, 0, 0}, 1},             // sqx
      Plane{{0, 1, 0}, 1},             // sqy
      Plane{{0, 0, 1}, 1},             // sqz
      Plane{{-1, 1, 1}, 2},            // t1
      Plane{{1, 1, -1}, 2},            // t2
      Plane{{1, -1, 1}, 2},            // t3
      Plane{{1, -1, -1}, 2 - delta},   // cut1
      Plane{{0, 1, -1}, 2 - gamma},    // cut2a
      Plane{{0, -1, 1}, 2 - gamma},    // cut2b
      Plane{{1, 1, 1}, 2 - beta},      // top
      Plane{{0, 1, 1}, 2 - s},         // cut4
  };
  const std::vector<std::string> labels = {
      "base", "sqx",   "sqy",   "sqz", "t1",  "t2",
      "t3",   "cut1",  "cut2a", "cut2b", "top", "cut4"};
  Polyhedron cell = detail::cell_with_labels(planes, labels);

  // Presentation: rotate (1,1,1)/sqrt3 onto +z and rescale to unit edges.
  const Vec3 axis = normalized(Vec3{1, -1, 0});
  const Scalar c = 1.0 / std::sqrt(3.0);
  const Scalar sn = std::sqrt(2.0 / 3.0);
  const Scalar scale = 1.0 / std::sqrt(2.0);
  return cell.transformed([axis, c, sn, scale](const Vec3& v) {
    const Vec3 r = v * c + cross(axis, v) * sn + axis * (dot(axis, v) * (1 - c));
    return r * scale;
  });
}

// ---------------------------------------------------------------------------
// Equitruncated pentagonal rotunda
// ---------------------------------------------------------------------------

// Truncations of the pentagonal rotunda (unit edges, decagon D0..D9 in the
// base plane, middle ring M0..M4, top ring T0..T4).  Shared cuts:
//   cutM0..4, cutT0..4 -- vertex cuts at the middle and top ring vertices,
//     through the points at fraction `rho` along each incident edge;
//   q1, q2 -- shaves that remove one base edge each ((D9,D0) resp. (D4,D5)),
//     parallel to the face on the far side (pent2 resp. tri4) with opposite
//     outward normal, so the new face pairs with that far face;
//   the top pentagon pairs with the base.
// Variant 1 adds the symmetric shaves q1p (edge (D1,D2), parallel to pent3)
// and q2p (edge (D6,D7), parallel to tri0) plus one pair of vertical vertex
// cuts t1/t2 at the antipodal base vertices D3/D8; it is 21-equiprojective.
// Variant 2 instead surrounds the remaining base vertices with three pairs of
// vertical vertex cuts (D3/D8, D1/D6, D2/D7) and is 23-equiprojective.
inline Polyhedron equitruncated_pentagonal_rotunda(int variant = 1,
                                                   Scalar rho = 0.16,
                                                   Scalar depth = 0.4) {
  if (variant != 1 && variant != 2) {
    throw GeomError("equitruncated_pentagonal_rotunda: variant must be 1 or 2");
  }
  if (!(rho > 0.0 && rho < 0.5 && depth > 0.0 && depth < 1.0)) {
    throw GeomError("equitruncated_pentagonal_rotunda: parameters out of range");
  }
  const Scalar phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const Scalar r5 = 0.5 / std::sin(kPi / 5.0);  // pentagon circumradius
  std::vector<Vec3> v(20);
  auto deg = [](Scalar a) { return a * kPi / 180.0; };
  for (int k = 0; k < 10; ++k) {
    v[k] = {phi * std::cos(deg(36.0 * k)), phi * std::sin(deg(36.0 * k)), 0.0};
  }
  for (int j = 0; j < 5; ++j) {
    const Scalar a = deg(72.0 * j - 18.0);
    v[10 + j] = {phi * r5 * std::cos(a), phi * r5 * std::sin(a), r5};
  }
  for (int j = 0; j < 5; ++j) {
    const Scalar a = deg(72.0 * j + 18.0);
    v[15 + j] = {r5 * std::cos(a), r5 * std::sin(a), phi * r5};
  }
  const auto D = [](int k) { return ((k % 10) + 10) % 10; };
  const auto M = [](int j) { return 10 + ((j % 5) + 5) % 5; };
  const auto T = [](int j) { return 15 + ((j % 5) + 5) % 5; };
  const Vec3 interior{0.0, 0.0, 0.5};

  std::vector<Plane> planes;
  std::vector<std::string> labels;
  auto add = [&](const Plane& p, const std::string& l) {
    planes.push_back(p);
    labels.push_back(l);
  };
  add(Plane{{0, 0, -1}, 0}, "base");
  add(Plane{{0, 0, 1}, phi * r5}, "top");
  std::vector<Plane> pent(5), tri(5);
  for (int j = 0; j < 5; ++j) {
    pent[j] = detail::plane_through_outward(v[M(j)], v[D(2 * j)],
                                            v[D(2 * j + 1)], interior);
    std::ostringstream os;
    os << "pent" << j;
    add(pent[j], os.str());
  }
  for (int j = 0; j < 5; ++j) {
    tri[j] = detail::plane_through_outward(v[D(2 * j + 1)], v[D(2 * j + 2)],
                                           v[M(j + 1)], interior);
    std::ostringstream os;
    os << "tri" << j;
    add(tri[j], os.str());
  }
  for (int j = 0; j < 5; ++j) {
    std::ostringstream os;
    os << "triu" << j;
    add(detail::plane_through_outward(v[M(j)], v[T(j)], v[T(j - 1)], interior),
        os.str());
  }
  for (int j = 0; j < 5; ++j) {
    std::ostringstream os;
    os << "cutM" << j;
    add(detail::vertex_cut_plane(
            v, M(j), {D(2 * j - 1), D(2 * j), T(j), T(j - 1)}, rho, interior),
        os.str());
  }
  for (int j = 0; j < 5; ++j) {
    std::ostringstream os;
    os << "cutT" << j;
    add(detail::vertex_cut_plane(v, T(j), {M(j), M(j + 1), T(j + 1), T(j - 1)},
                                 rho, interior),
        os.str());
  }
  add(detail::shave_plane(v, -pent[2].normal, {D(9), D(0)}, depth), "q1");
  add(detail::shave_plane(v, -tri[4].normal, {D(4), D(5)}, depth), "q2");
  auto base_vertex_cut = [&](int k, Scalar azimuth_deg) {
    const Vec3 n{std::cos(deg(azimuth_deg)), std::sin(deg(azimuth_deg)), 0.0};
    return detail::shave_plane(v, n, {D(k)}, depth);
  };
  if (variant == 1) {
    add(detail::shave_plane(v, -pent[3].normal, {D(1), D(2)}, depth), "q1p");
    add(detail::shave_plane(v, -tri[0].normal, {D(6), D(7)}, depth), "q2p");
    add(base_vertex_cut(3, 108.0), "t1");
    add(base_vertex_cut(8, 288.0), "t2");
  } else {
    add(base_vertex_cut(3, 108.0), "t1");
    add(base_vertex_cut(8, 288.0), "t2");
    add(base_vertex_cut(1, 36.0), "t3");
    add(base_vertex_cut(6, 216.0), "t4");
    add(base_vertex_cut(2, 72.0), "t5");
    add(base_vertex_cut(7, 252.0), "t6");
  }
  return detail::cell_with_labels(planes, labels);
}

// ---------------------------------------------------------------------------
// Half-and-reglue derivatives of the centrally symmetric seeds
// ---------------------------------------------------------------------------

enum class ZonoSource {
  kRhombicDodecahedron,
  kTruncatedOctahedron,
  kTruncatedCuboctahedron,
};

namespace detail {

// Half of the rhombic dodecahedron cut through the short diagonals of the
// two opposite rhombi normal to (0,1,1) and (0,-1,-1): the plane y = z,
// which also contains four edges and six vertices of the solid.  The
// section hexagon (sides sqrt3, sqrt3, 2 repeating) is not regular and its
// angles alternate, so no cut parallel to it can ever be regular; but it is
// centrally symmetric with A + C + E = B + D + F, i.e. an affine image of a
// regular hexagon.  Stretching the whole half by sqrt(3/2) along (0,1,1)
// therefore makes the base a true regular hexagon (side 2) while leaving
// every edge-parallelism and face-parallelism intact, which is all the
// pairing argument needs.  Faces after the stretch: two triangles (parallel
// translates of one another), five parallelograms, and the base.
inline Polyhedron rd_half_piece() {
  const std::vector<Plane> planes = {
      Plane{{0, -1, 1}, 0},   // base: keep y >= z
      Plane{{0, 1, 1}, 2},    // tri0
      Plane{{0, -1, -1}, 2},  // tri1
      Plane{{1, 1, 0}, 2},    // para0
      Plane{{-1, 1, 0}, 2},   // para1
      Plane{{1, 0, -1}, 2},   // para2
      Plane{{-1, 0, -1}, 2},  // para3
      Plane{{0, 1, -1}, 2},   // rhombus
  };
  const std::vector<std::string> labels = {
      "base", "tri0", "tri1", "para0", "para1", "para2", "para3", "rhombus"};
  const Polyhedron half = cell_with_labels(planes, labels);
  const Scalar lam = std::sqrt(1.5);
  return half.transformed([lam](const Vec3& p) {
    const Scalar w = (lam - 1.0) * (p.y + p.z) * 0.5;
    return Vec3{p.x, p.y + w, p.z + w};
  });
}

// Half of the truncated octahedron from the cut through the horizontal
// diagonals of its four side squares (the plane z = 0), adjusted: parallel
// sections have sides 2(1-h) on the squares and sqrt2(1+h) on the hexagons,
// so the octagon is regular at h = 3 - 2*sqrt2 and the adjusted half is the
// cap above that height.  Faces: top square, four triangles (upper halves of
// the side squares), four trimmed hexagons, base octagon.
inline Polyhedron to_cap_piece() {
  const Scalar h = 3.0 - 2.0 * std::sqrt(2.0);
  const std::vector<Plane> planes = {
      Plane{{0, 0, -1}, -h},  // base
      Plane{{0, 0, 1}, 2},    // top
      Plane{{1, 0, 0}, 2},    // tri0
      Plane{{0, 1, 0}, 2},    // tri1
      Plane{{-1, 0, 0}, 2},   // tri2
      Plane{{0, -1, 0}, 2},   // tri3
      Plane{{1, 1, 1}, 3},    // hex0
      Plane{{-1, 1, 1}, 3},   // hex1
      Plane{{-1, -1, 1}, 3},  // hex2
      Plane{{1, -1, 1}, 3},   // hex3
  };
  const std::vector<std::string> labels = {"base", "top",  "tri0", "tri1",
                                           "tri2", "tri3", "hex0", "hex1",
                                           "hex2", "hex3"};
  return cell_with_labels(planes, labels);
}

// Smaller piece of the truncated cuboctahedron above the cut parallel to the
// top octagon through the bottom edges of the four upper diagonal squares
// (z = 1 + sqrt2), adjusted down to z = 2*sqrt2 - 1 where the section
// octagon is regular.  Faces: top octagon, the four diagonal squares (kept
// whole), four trimmed hexagons, four trapezoids cut from the vertical
// octagons, base octagon.
inline Polyhedron tc_cap_piece() {
  const Scalar s2 = std::sqrt(2.0);
  const Scalar xo = 1.0 + 2.0 * s2;  // octagon plane offset
  const Scalar sq = 2.0 + 3.0 * s2;  // square plane offset
  const Scalar hx = 3.0 + 3.0 * s2;  // hexagon plane offset
  const Scalar h = 2.0 * s2 - 1.0;
  const std::vector<Plane> planes = {
      Plane{{0, 0, -1}, -h},   // base
      Plane{{0, 0, 1}, xo},    // top
      Plane{{1, 0, 1}, sq},    // sq0
      Plane{{0, 1, 1}, sq},    // sq1
      Plane{{-1, 0, 1}, sq},   // sq2
      Plane{{0, -1, 1}, sq},   // sq3
      Plane{{1, 1, 1}, hx},    // hex0
      Plane{{-1, 1, 1}, hx},   // hex1
      Plane{{-1, -1, 1}, hx},  // hex2
      Plane{{1, -1, 1}, hx},   // hex3
      Plane{{1, 0, 0}, xo},    // trap0
      Plane{{0, 1, 0}, xo},    // trap1
      Plane{{-1, 0, 0}, xo},   // trap2
      Plane{{0, -1, 0}, xo},   // trap3
  };
  const std::vector<std::string> labels = {
      "base", "top",  "sq0",  "sq1",   "sq2",   "sq3",   "hex0",
      "hex1", "hex2", "hex3", "trap0", "trap1", "trap2", "trap3"};
  return cell_with_labels(planes, labels);
}

// Half of the shaved truncated cuboctahedron.  All six octagon planes are
// first pushed in by e0 = (sqrt2-1)/2, turning the twelve squares into
// rectangles; at exactly that depth the six rectangles normal to directions
// perpendicular to (1,1,1) each have one diagonal (of length sqrt6) in the
// central plane x+y+z = 0, so that plane halves the solid through those six
// diagonals.  The half keeps one full hexagon, three mixed hexagons, three
// octagons, three polar rectangles, one triangle from each equatorial
// rectangle, and the 12-gon base (sides alternating sqrt6 and 2 + sqrt2*e0).
inline Polyhedron tc_half_piece() {
  const Scalar s2 = std::sqrt(2.0);
  const Scalar e0 = (s2 - 1.0) / 2.0;
  const Scalar xo = 1.0 + 2.0 * s2 - e0;  // shaved octagon offset
  const Scalar sq = 2.0 + 3.0 * s2;       // square plane offset
  const Scalar hx = 3.0 + 3.0 * s2;       // hexagon plane offset
  const std::vector<Plane> planes = {
      Plane{{1, 1, 1}, 0},      // base
      Plane{{-1, -1, -1}, hx},  // hexb
      Plane{{1, -1, -1}, hx},   // hexm0
      Plane{{-1, 1, -1}, hx},   // hexm1
      Plane{{-1, -1, 1}, hx},   // hexm2
      Plane{{-1, 0, 0}, xo},    // octx
      Plane{{0, -1, 0}, xo},    // octy
      Plane{{0, 0, -1}, xo},    // octz
      Plane{{-1, -1, 0}, sq},   // sqp0
      Plane{{-1, 0, -1}, sq},   // sqp1
      Plane{{0, -1, -1}, sq},   // sqp2
      Plane{{1, -1, 0}, sq},    // sqe0
      Plane{{-1, 1, 0}, sq},    // sqe1
      Plane{{1, 0, -1}, sq},    // sqe2
      Plane{{-1, 0, 1}, sq},    // sqe3
      Plane{{0, 1, -1}, sq},    // sqe4
      Plane{{0, -1, 1}, sq},    // sqe5
  };
  const std::vector<std::string> labels = {
      "base", "hexb", "hexm0", "hexm1", "hexm2", "octx", "octy", "octz",
      "sqp0", "sqp1", "sqp2",  "sqe0",  "sqe1",  "sqe2", "sqe3", "sqe4",
      "sqe5"};
  return cell_with_labels(planes, labels);
}

}  // namespace detail

// Pinned glue correspondences for the half-and-reglue solids, fixed by a
// hand sweep over every congruent correspondence.  For the first three the
// rotation seats each seam triangle or hexagon against a face of another
// family, so no faces merge across the seam; the two shifts for the shaved
// cuboctahedron halves select its two genuinely different rotation classes
// (octagons onto octagons resp. octagons onto hexagons).  The remaining
// shifts also glue into equiprojective solids with the same silhouette
// count, differing only in which seam faces merge.
inline constexpr int kRdGlueShift = 0;
inline constexpr bool kRdGlueReflect = true;
inline constexpr int kToGlueShift = 0;
inline constexpr bool kToGlueReflect = true;
inline constexpr int kTc1GlueShift = 0;
inline constexpr bool kTc1GlueReflect = true;
inline constexpr int kTc2GlueShift = 1;
inline constexpr bool kTc2GlueReflect = false;
inline constexpr int kTc3GlueShift = 3;
inline constexpr bool kTc3GlueReflect = false;

// Cuts the seed into halves, adjusts the section until it is regular, and
// glues two copies of one half back together under a pinned rotation:
//  * rhombic dodecahedron: halves from the short-diagonal cut, normalised
//    so the base hexagon is regular, then rotated so the two seam triangles
//    of one half meet parallelogram faces of the other.
//  * truncated octahedron: halves from the square-diagonal cut, rotated so
//    the seam triangles meet the trimmed hexagons.
//  * truncated cuboctahedron, variant 1: the small cap above the cut through
//    four square edges, doubled with the corner hexagons of one copy seated
//    against the side trapezoids of the other.
//  * truncated cuboctahedron, variants 2 and 3: the solid is first shaved at
//    all six octagons, then halved through the six rectangle diagonals
//    (section normal (1,1,1)); variant 2 rotates octagons onto octagons,
//    variant 3 rotates octagons onto hexagons.
inline Polyhedron half_and_reglue(ZonoSource source, int variant = 1) {
  switch (source) {
    case ZonoSource::kRhombicDodecahedron: {
      if (variant != 1) {
        throw GeomError("half_and_reglue: rhombic dodecahedron has variant 1");
      }
      const Polyhedron piece = detail::rd_half_piece();
      const int base = face_with_label(piece, "base");
      return glue(piece, piece,
                  GlueSpec{base, base, kRdGlueShift, kRdGlueReflect});
    }
    case ZonoSource::kTruncatedOctahedron: {
      if (variant != 1) {
        throw GeomError("half_and_reglue: truncated octahedron has variant 1");
      }
      const Polyhedron piece = detail::to_cap_piece();
      const int base = face_with_label(piece, "base");
      return glue(piece, piece,
                  GlueSpec{base, base, kToGlueShift, kToGlueReflect});
    }
    case ZonoSource::kTruncatedCuboctahedron: {
      if (variant == 1) {
        const Polyhedron piece = detail::tc_cap_piece();
        const int base = face_with_label(piece, "base");
        return glue(piece, piece,
                    GlueSpec{base, base, kTc1GlueShift, kTc1GlueReflect});
      }
      if (variant == 2 || variant == 3) {
        const Polyhedron piece = detail::tc_half_piece();
        const int base = face_with_label(piece, "base");
        const int shift = variant == 2 ? kTc2GlueShift : kTc3GlueShift;
        const bool reflect = variant == 2 ? kTc2GlueReflect : kTc3GlueReflect;
        return glue(piece, piece, GlueSpec{base, base, shift, reflect});
      }
      throw GeomError("half_and_reglue: truncated cuboctahedron variants 1-3");
    }
  }
  throw GeomError("half_and_reglue: unknown source");
}

inline Polyhedron equitruncated_rhombic_dodecahedron() {
  return half_and_reglue(ZonoSource::kRhombicDodecahedron);
}
inline Polyhedron equitruncated_octahedron() {
  return half_and_reglue(ZonoSource::kTruncatedOctahedron);
}
inline Polyhedron equitruncated_cuboctahedron(int variant) {
  return half_and_reglue(ZonoSource::kTruncatedCuboctahedron, variant);
}

// ---------------------------------------------------------------------------
// Twisted biprisms
// ---------------------------------------------------------------------------

namespace detail {

// Right prism (height 2) over the lower half of a regular (2k-2)-gon of
// circumradius 1, split through a horizontal diameter; for k = 3 the cross
// section is instead the equilateral triangle on the same diameter.  The
// rectangle over the diameter edge is the 2x2 "glue" face.  The interior
// angles at its corners are (k-2)*90/(k-1) < 90 degrees, which keeps the
// right-angled join of two such prisms convex.
inline Polyhedron half_polygon_prism(int k) {
  if (k < 3) throw GeomError("half_polygon_prism: need at least 3 vertices");
  std::vector<Vec3> cross_section;
  cross_section.push_back({-1.0, 0.0, 0.0});
  if (k == 3) {
    cross_section.push_back({0.0, -std::sqrt(3.0), 0.0});
  } else {
    for (int j = 1; j <= k - 2; ++j) {
      const Scalar a =
          kPi + kPi * static_cast<Scalar>(j) / static_cast<Scalar>(k - 1);
      cross_section.push_back({std::cos(a), std::sin(a), 0.0});
    }
  }
  cross_section.push_back({1.0, 0.0, 0.0});

  std::vector<Vec3> v;
  v.reserve(static_cast<std::size_t>(2 * k));
  for (const Vec3& c : cross_section) v.push_back({c.x, c.y, -1.0});
  for (const Vec3& c : cross_section) v.push_back({c.x, c.y, 1.0});
  std::vector<std::vector<int>> f;
  std::vector<std::string> labels;
  std::vector<int> bottom, top;
  for (int i = 0; i < k; ++i) bottom.push_back(i);
  for (int i = 0; i < k; ++i) top.push_back(k + i);
  f.push_back(bottom);
  labels.emplace_back("cap0");
  f.push_back(top);
  labels.emplace_back("cap1");
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    f.push_back({i, j, k + j, k + i});
    if (j == 0) {
      labels.emplace_back("glue");
    } else {
      std::ostringstream os;
      os << "side" << i;
      labels.push_back(os.str());
    }
  }
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f), std::move(labels));
}

}  // namespace detail

// Pinned correspondence that makes the second prism sit at right angles to
// the first (the other shifts of the square produce the straight join).
inline constexpr int kBiprismGlueShift = 0;
inline constexpr bool kBiprismGlueReflect = false;

// Joins a k1-gonal and a k2-gonal right prism along a congruent square side
// face, the second prism twisted by 90 degrees.  The silhouette then always
// shows k1 edges from one prism and k2 from the other: a (k1+k2)-gon.
// biprism(3,3) is the gyrobifastigium.
inline Polyhedron biprism(int k1, int k2) {
  const Polyhedron a = detail::half_polygon_prism(k1);
  const Polyhedron b = detail::half_polygon_prism(k2);
  const int ga = face_with_label(a, "glue");
  const int gb = face_with_label(b, "glue");
  return glue(a, b, GlueSpec{ga, gb, kBiprismGlueShift, kBiprismGlueReflect});
}

inline Polyhedron gyrobifastigium() { return biprism(3, 3); }

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::function<Polyhedron()> build;
  // Expected silhouette count; empty for the non-equiprojective controls.
  std::optional<int> expected_k;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    e.push_back({"cube", [] { return cube(); }, 6});
    for (int p = 3; p <= 8; ++p) {
      std::ostringstream os;
      os << "prism" << p;
      e.push_back({os.str(), [p] { return prism(p); }, p + 2});
    }
    e.push_back({"gyrobifastigium", [] { return gyrobifastigium(); }, 6});
    e.push_back({"biprism_3_4", [] { return biprism(3, 4); }, 7});
    e.push_back({"biprism_4_4", [] { return biprism(4, 4); }, 8});
    e.push_back(
        {"rhombic_dodecahedron", [] { return rhombic_dodecahedron(); }, 8});
    e.push_back(
        {"truncated_octahedron", [] { return truncated_octahedron(); }, 12});
    e.push_back({"truncated_cuboctahedron",
                 [] { return truncated_cuboctahedron(); }, 18});
    e.push_back({"equitruncated_tetrahedron",
                 [] { return equitruncated_tetrahedron(); }, 10});
    e.push_back({"equitruncated_tetrahedron_skew",
                 [] { return equitruncated_tetrahedron_skew(); }, 10});
    e.push_back(
        {"equitruncated_pyramid", [] { return equitruncated_pyramid(); }, 10});
    e.push_back({"equitruncated_triangular_cupola",
                 [] { return equitruncated_triangular_cupola(); }, 11});
    e.push_back({"equitruncated_pentagonal_rotunda_1",
                 [] { return equitruncated_pentagonal_rotunda(1); }, 21});
    e.push_back({"equitruncated_pentagonal_rotunda_2",
                 [] { return equitruncated_pentagonal_rotunda(2); }, 23});
    e.push_back({"equitruncated_rhombic_dodecahedron",
                 [] { return equitruncated_rhombic_dodecahedron(); }, 8});
    e.push_back({"equitruncated_octahedron",
                 [] { return equitruncated_octahedron(); }, 12});
    e.push_back({"equitruncated_cuboctahedron_1",
                 [] { return equitruncated_cuboctahedron(1); }, 16});
    e.push_back({"equitruncated_cuboctahedron_2",
                 [] { return equitruncated_cuboctahedron(2); }, 18});
    e.push_back({"equitruncated_cuboctahedron_3",
                 [] { return equitruncated_cuboctahedron(3); }, 18});
    e.push_back({"tetrahedron", [] { return tetrahedron(); }, std::nullopt});
    e.push_back({"square_pyramid", [] { return square_pyramid(); }, std::nullopt});
    e.push_back(
        {"triangular_cupola", [] { return triangular_cupola(); }, std::nullopt});
    e.push_back({"pentagonal_rotunda", [] { return pentagonal_rotunda(); },
                 std::nullopt});
    return e;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace equiproj
