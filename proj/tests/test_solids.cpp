// Stock solid builders: counts, metrics and closed-form edge lengths.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "equiproj/solids.hpp"

using namespace equiproj;

namespace {

std::pair<Scalar, Scalar> edge_length_range(const Polyhedron& p) {
  Scalar lo = 1e300, hi = 0;
  for (const Edge& e : p.edges()) {
    Scalar len = distance(p.vertex(e.a), p.vertex(e.b));
    lo = std::min(lo, len);
    hi = std::max(hi, len);
  }
  return {lo, hi};
}

std::multiset<size_t> face_size_census(const Polyhedron& p) {
  std::multiset<size_t> c;
  for (int f = 0; f < (int)p.face_count(); ++f) c.insert(p.face(f).size());
  return c;
}

}  // namespace

TEST_CASE("reference solid counts", "[solids]") {
  Polyhedron t = tetrahedron();
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 6);
  CHECK(t.face_count() == 4);

  Polyhedron c = cube();
  CHECK(c.vertex_count() == 8);
  CHECK(c.edge_count() == 12);
  CHECK(c.face_count() == 6);

  Polyhedron sp = square_pyramid();
  CHECK(sp.vertex_count() == 5);
  CHECK(sp.edge_count() == 8);
  CHECK(sp.face_count() == 5);

  Polyhedron p6 = prism(6);
  CHECK(p6.vertex_count() == 12);
  CHECK(p6.edge_count() == 18);
  CHECK(p6.face_count() == 8);
}

TEST_CASE("prism validates its arguments", "[solids]") {
  CHECK_THROWS_AS(prism(2), GeomError);
  CHECK_NOTHROW(prism(12, 2.0, 0.5));
}

TEST_CASE("zonohedron of 3 orthonormal generators is the unit cube",
          "[solids]") {
  Polyhedron z = zonohedron({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(z.vertex_count() == 8);
  CHECK(z.face_count() == 6);
  CHECK(z.volume() == Catch::Approx(1.0));
  // Spans [-1/2, 1/2]^3.
  for (const Vec3& v : z.vertices()) {
    CHECK(std::abs(std::abs(v.x) - 0.5) < 1e-12);
    CHECK(std::abs(std::abs(v.y) - 0.5) < 1e-12);
    CHECK(std::abs(std::abs(v.z) - 0.5) < 1e-12);
  }
  CHECK_THROWS_AS(zonohedron({{1, 0, 0}, {0, 1, 0}}), GeomError);
}

TEST_CASE("rhombic dodecahedron structure", "[solids]") {
  Polyhedron rd = rhombic_dodecahedron();
  CHECK(rd.vertex_count() == 14);
  CHECK(rd.edge_count() == 24);
  CHECK(rd.face_count() == 12);
  for (int f = 0; f < (int)rd.face_count(); ++f)
    CHECK(rd.face(f).size() == 4);
  // Vertex classes: 8 cube corners (+-1,+-1,+-1) and 6 axis points at
  // distance 2.
  int corners = 0, axes = 0;
  for (const Vec3& v : rd.vertices()) {
    Scalar n = norm(v);
    if (std::abs(n - std::sqrt(3.0)) < 1e-9) ++corners;
    if (std::abs(n - 2.0) < 1e-9) ++axes;
  }
  CHECK(corners == 8);
  CHECK(axes == 6);
  // All edges equal: sqrt(3).
  auto [lo, hi] = edge_length_range(rd);
  CHECK(lo == Catch::Approx(std::sqrt(3.0)));
  CHECK(hi == Catch::Approx(std::sqrt(3.0)));
}

TEST_CASE("truncated octahedron structure", "[solids]") {
  Polyhedron to = truncated_octahedron();
  CHECK(to.vertex_count() == 24);
  CHECK(to.edge_count() == 36);
  CHECK(to.face_count() == 14);
  auto census = face_size_census(to);
  CHECK(census.count(4) == 6);
  CHECK(census.count(6) == 8);
  // Vertices are the permutations of (0,+-1,+-2); all edges sqrt(2).
  for (const Vec3& v : to.vertices())
    CHECK(norm(v) == Catch::Approx(std::sqrt(5.0)));
  auto [lo, hi] = edge_length_range(to);
  CHECK(lo == Catch::Approx(std::sqrt(2.0)));
  CHECK(hi == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("truncated cuboctahedron structure", "[solids]") {
  Polyhedron tc = truncated_cuboctahedron();
  CHECK(tc.vertex_count() == 48);
  CHECK(tc.edge_count() == 72);
  CHECK(tc.face_count() == 26);
  auto census = face_size_census(tc);
  CHECK(census.count(4) == 12);
  CHECK(census.count(6) == 8);
  CHECK(census.count(8) == 6);
  // Edge length 2 and vertex radius sqrt(1 + (1+r2)^2 + (1+2 r2)^2).
  const Scalar r2 = std::sqrt(2.0);
  const Scalar rad =
      std::sqrt(1.0 + (1 + r2) * (1 + r2) + (1 + 2 * r2) * (1 + 2 * r2));
  for (const Vec3& v : tc.vertices()) CHECK(norm(v) == Catch::Approx(rad));
  auto [lo, hi] = edge_length_range(tc);
  CHECK(lo == Catch::Approx(2.0));
  CHECK(hi == Catch::Approx(2.0));
}

TEST_CASE("triangular cupola closed form", "[solids]") {
  Polyhedron cup = triangular_cupola();
  CHECK(cup.vertex_count() == 9);
  CHECK(cup.edge_count() == 15);
  CHECK(cup.face_count() == 8);
  auto census = face_size_census(cup);
  CHECK(census.count(3) == 4);  // top + 3 side triangles
  CHECK(census.count(4) == 3);
  CHECK(census.count(6) == 1);
  // Johnson solid: every edge has unit length.
  auto [lo, hi] = edge_length_range(cup);
  CHECK(lo == Catch::Approx(1.0));
  CHECK(hi == Catch::Approx(1.0));
  // Labeled faces.
  CHECK(cup.face(face_with_label(cup, "base")).size() == 6);
  CHECK(cup.face(face_with_label(cup, "top")).size() == 3);
  CHECK(cup.face(face_with_label(cup, "sq1")).size() == 4);
  CHECK(approx_equal(cup.face_normal(face_with_label(cup, "base")),
                     {0, 0, -1}));
}

TEST_CASE("pentagonal rotunda closed form", "[solids]") {
  Polyhedron rot = pentagonal_rotunda();
  CHECK(rot.vertex_count() == 20);
  CHECK(rot.edge_count() == 35);
  CHECK(rot.face_count() == 17);
  auto census = face_size_census(rot);
  CHECK(census.count(3) == 10);
  CHECK(census.count(5) == 6);   // 5 side pentagons + top
  CHECK(census.count(10) == 1);  // decagon base
  // Johnson solid: every edge has unit length.
  auto [lo, hi] = edge_length_range(rot);
  CHECK(lo == Catch::Approx(1.0));
  CHECK(hi == Catch::Approx(1.0));
  CHECK(approx_equal(rot.face_normal(face_with_label(rot, "base")),
                     {0, 0, -1}));
  CHECK(approx_equal(rot.face_normal(face_with_label(rot, "top")), {0, 0, 1}));
  // The five labeled side pentagons and their triangles exist.
  for (int j = 0; j < 5; ++j) {
    CHECK(rot.face(face_with_label(rot, "pent" + std::to_string(j))).size() ==
          5);
    CHECK(rot.face(face_with_label(rot, "tri" + std::to_string(j))).size() ==
          3);
    CHECK(rot.face(face_with_label(rot, "triu" + std::to_string(j))).size() ==
          3);
  }
}

TEST_CASE("face_with_normal finds unique faces", "[solids]") {
  Polyhedron c = cube();
  CHECK(face_with_normal(c, {0, 0, 1}) == face_with_label(c, "top"));
  CHECK_THROWS_AS(face_with_normal(c, {1, 1, 1}), GeomError);
}
