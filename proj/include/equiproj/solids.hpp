#pragma once

// Builders for the stock solids used throughout the library and CLI:
// platonic/Johnson reference shapes, regular prisms, and the zonohedra
// (rhombic dodecahedron, truncated octahedron, truncated cuboctahedron)
// generated as convex hulls of signed generator half-sums.

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equiproj/core.hpp"
#include "equiproj/hull.hpp"
#include "equiproj/polyhedron.hpp"

namespace equiproj {

// Reorients every face loop counterclockwise as seen from outside, keeping
// labels attached.  Builders list faces in whatever order is convenient and
// call this before Polyhedron::build.
inline void orient_faces_outward(const std::vector<Vec3>& vertices,
                                 std::vector<std::vector<int>>* faces) {
  Vec3 interior{0.0, 0.0, 0.0};
  for (const Vec3& v : vertices) interior = interior + v;
  interior = interior * (1.0 / static_cast<Scalar>(vertices.size()));
  for (auto& loop : *faces) {
    Vec3 normal{0.0, 0.0, 0.0};
    Vec3 centroid{0.0, 0.0, 0.0};
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& p = vertices[static_cast<std::size_t>(loop[i])];
      const Vec3& q = vertices[static_cast<std::size_t>(loop[(i + 1) % n])];
      normal = normal + cross(p, q);
      centroid = centroid + p;
    }
    centroid = centroid * (1.0 / static_cast<Scalar>(n));
    if (dot(normal, centroid - interior) < 0.0) {
      std::reverse(loop.begin(), loop.end());
    }
  }
}

// Unique face whose outward normal points along `dir`; throws if absent.
inline int face_with_normal(const Polyhedron& p, const Vec3& dir,
                            Scalar eps = 1e-6) {
  const Vec3 d = normalized(dir);
  int found = -1;
  for (int f = 0; f < p.face_count(); ++f) {
    if (norm(p.face_normal(f) - d) <= eps) {
      if (found >= 0) throw GeomError("face_with_normal: direction ambiguous");
      found = f;
    }
  }
  if (found < 0) throw GeomError("face_with_normal: no face in that direction");
  return found;
}

// Unique face carrying the given label; throws if absent or duplicated.
inline int face_with_label(const Polyhedron& p, const std::string& label) {
  int found = -1;
  for (int f = 0; f < p.face_count(); ++f) {
    if (p.face_label(f) == label) {
      if (found >= 0) {
        throw GeomError("face_with_label: duplicate label " + label);
      }
      found = f;
    }
  }
  if (found < 0) throw GeomError("face_with_label: no face labelled " + label);
  return found;
}

// --------------------------------------------------------------------------
// Reference solids
// --------------------------------------------------------------------------

// Regular tetrahedron: alternate vertices of the [-1,1] cube.
inline Polyhedron tetrahedron() {
  std::vector<Vec3> v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::vector<int>> f = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f),
                           {"f0", "f1", "f2", "f3"});
}

inline Polyhedron cube() {
  std::vector<Vec3> v = {{-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
                         {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1}};
  std::vector<std::vector<int>> f = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                     {2, 3, 7, 6}, {1, 2, 6, 5}, {0, 3, 7, 4}};
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f),
                           {"bottom", "top", "y-", "y+", "x+", "x-"});
}

inline Polyhedron square_pyramid() {
  std::vector<Vec3> v = {{-1, -1, 0}, {1, -1, 0}, {1, 1, 0}, {-1, 1, 0},
                         {0, 0, 1.2}};
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f),
                           {"base", "s0", "s1", "s2", "s3"});
}

// Right prism over a regular p-gon (circumradius r, height h, axis z).
inline Polyhedron prism(int p, Scalar r = 1.0, Scalar h = 1.0) {
  if (p < 3) throw GeomError("prism needs at least 3 sides");
  std::vector<Vec3> v;
  v.reserve(static_cast<std::size_t>(2 * p));
  for (int i = 0; i < p; ++i) {
    const Scalar t = 2.0 * kPi * static_cast<Scalar>(i) / static_cast<Scalar>(p);
    v.push_back({r * std::cos(t), r * std::sin(t), -h / 2.0});
  }
  for (int i = 0; i < p; ++i) {
    const Scalar t = 2.0 * kPi * static_cast<Scalar>(i) / static_cast<Scalar>(p);
    v.push_back({r * std::cos(t), r * std::sin(t), h / 2.0});
  }
  std::vector<std::vector<int>> f;
  std::vector<std::string> labels;
  std::vector<int> bottom, top;
  for (int i = 0; i < p; ++i) bottom.push_back(i);
  for (int i = 0; i < p; ++i) top.push_back(p + i);
  f.push_back(bottom);
  labels.emplace_back("bottom");
  f.push_back(top);
  labels.emplace_back("top");
  for (int i = 0; i < p; ++i) {
    const int j = (i + 1) % p;
    f.push_back({i, j, p + j, p + i});
    std::ostringstream os;
    os << "side" << i;
    labels.push_back(os.str());
  }
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f), std::move(labels));
}

// --------------------------------------------------------------------------
// Zonohedra
// --------------------------------------------------------------------------

// Convex hull of all signed half-sums (1/2) * sum(eps_i * g_i), eps_i = +-1.
// Every face of the result is centrally symmetric, which is what makes these
// solids equiprojective out of the box.
inline Polyhedron zonohedron(const std::vector<Vec3>& generators) {
  if (generators.size() < 3 || generators.size() > 16) {
    throw GeomError("zonohedron expects between 3 and 16 generators");
  }
  const std::size_t m = generators.size();
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(1) << m);
  for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << m);
       ++mask) {
    Vec3 s{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
      const Scalar sign = (mask >> i) & 1 ? 1.0 : -1.0;
      s = s + generators[i] * sign;
    }
    pts.push_back(s * 0.5);
  }
  return Polyhedron::hull_of(pts);
}

// Rhombic dodecahedron: zonohedron over the four cube diagonals.
// Vertices: (+-1,+-1,+-1) plus the axis points (+-2,0,0),(0,+-2,0),(0,0,+-2).
inline Polyhedron rhombic_dodecahedron() {
  return zonohedron({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}});
}

// Truncated octahedron: zonohedron over the six face diagonals of the cube.
// Vertices: all permutations of (0,+-1,+-2).
inline Polyhedron truncated_octahedron() {
  return zonohedron(
      {{1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}});
}

// Truncated cuboctahedron with edge length 2: zonohedron over the three
// doubled axes and the six doubled diagonal directions sqrt2*(1,+-1,0)-type.
// Vertices: all permutations of (+-1, +-(1+sqrt2), +-(1+2*sqrt2)).
inline Polyhedron truncated_cuboctahedron() {
  const Scalar s = std::sqrt(2.0);
  return zonohedron({{2, 0, 0},
                     {0, 2, 0},
                     {0, 0, 2},
                     {s, s, 0},
                     {s, -s, 0},
                     {s, 0, s},
                     {s, 0, -s},
                     {0, s, s},
                     {0, s, -s}});
}

// --------------------------------------------------------------------------
// Johnson solids used as counterexamples and construction seeds
// --------------------------------------------------------------------------

// Triangular cupola J3 (unit edge): hexagon base, triangle top, three
// squares and three triangles around the side.
inline Polyhedron triangular_cupola() {
  std::vector<Vec3> v;
  for (int i = 0; i < 6; ++i) {  // base hexagon, circumradius 1
    const Scalar t = kPi / 3.0 * static_cast<Scalar>(i);
    v.push_back({std::cos(t), std::sin(t), 0.0});
  }
  const Scalar rt = 1.0 / std::sqrt(3.0);
  const Scalar h = std::sqrt(2.0 / 3.0);
  for (int j = 0; j < 3; ++j) {  // top triangle
    const Scalar t = kPi / 6.0 + 2.0 * kPi / 3.0 * static_cast<Scalar>(j);
    v.push_back({rt * std::cos(t), rt * std::sin(t), h});
  }
  std::vector<std::vector<int>> f;
  std::vector<std::string> labels;
  f.push_back({0, 1, 2, 3, 4, 5});
  labels.emplace_back("base");
  f.push_back({6, 7, 8});
  labels.emplace_back("top");
  for (int j = 0; j < 3; ++j) {  // square j spans base edge (2j+1, 2j+2)
    f.push_back({2 * j + 1, (2 * j + 2) % 6, 6 + (j + 1) % 3, 6 + j});
    std::ostringstream os;
    os << "sq" << j;
    labels.push_back(os.str());
  }
  for (int j = 0; j < 3; ++j) {  // triangle j spans base edge (2j, 2j+1)
    f.push_back({2 * j, 2 * j + 1, 6 + j});
    std::ostringstream os;
    os << "tri" << j;
    labels.push_back(os.str());
  }
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f), std::move(labels));
}

// Pentagonal rotunda J6 (unit edge) in closed form.  Vertex layout:
//   D0..D9  decagon rim (z = 0, circumradius phi)
//   M0..M4  middle belt (z = R5)
//   T0..T4  top pentagon (z = phi * R5)
// with phi the golden ratio and R5 = 1/(2 sin 36deg) the unit-pentagon
// circumradius.
inline Polyhedron pentagonal_rotunda() {
  const Scalar phi = (1.0 + std::sqrt(5.0)) * 0.5;
  const Scalar r5 = 1.0 / (2.0 * std::sin(kPi / 5.0));
  auto deg = [](Scalar d) { return d * kPi / 180.0; };
  std::vector<Vec3> v;
  for (int k = 0; k < 10; ++k) {
    v.push_back({phi * std::cos(deg(36.0 * k)), phi * std::sin(deg(36.0 * k)),
                 0.0});
  }
  for (int j = 0; j < 5; ++j) {
    const Scalar t = deg(72.0 * j - 18.0);
    v.push_back({phi * r5 * std::cos(t), phi * r5 * std::sin(t), r5});
  }
  for (int j = 0; j < 5; ++j) {
    const Scalar t = deg(72.0 * j + 18.0);
    v.push_back({r5 * std::cos(t), r5 * std::sin(t), phi * r5});
  }
  auto D = [](int k) { return (k % 10 + 10) % 10; };
  auto M = [](int j) { return 10 + (j % 5 + 5) % 5; };
  auto T = [](int j) { return 15 + (j % 5 + 5) % 5; };
  std::vector<std::vector<int>> f;
  std::vector<std::string> labels;
  f.push_back({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  labels.emplace_back("base");
  f.push_back({T(0), T(1), T(2), T(3), T(4)});
  labels.emplace_back("top");
  for (int j = 0; j < 5; ++j) {  // side pentagons
    f.push_back({M(j), D(2 * j), D(2 * j + 1), M(j + 1), T(j)});
    std::ostringstream os;
    os << "pent" << j;
    labels.push_back(os.str());
  }
  for (int j = 0; j < 5; ++j) {  // lower triangles
    f.push_back({D(2 * j + 1), D(2 * j + 2), M(j + 1)});
    std::ostringstream os;
    os << "tri" << j;
    labels.push_back(os.str());
  }
  for (int j = 0; j < 5; ++j) {  // upper triangles
    f.push_back({M(j), T(j), T(j - 1)});
    std::ostringstream os;
    os << "triu" << j;
    labels.push_back(os.str());
  }
  orient_faces_outward(v, &f);
  return Polyhedron::build(std::move(v), std::move(f), std::move(labels));
}

}  // namespace equiproj
