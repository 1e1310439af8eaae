// Edge-face duples, the compensation relation, and the recognizer.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "equiproj/compensation.hpp"
#include "equiproj/solids.hpp"

using namespace equiproj;

namespace {

// Index of the duple on the edge {va,vb} seen from face `f`.
int find_duple(const Polyhedron& p, const std::vector<Duple>& duples, int va,
               int vb, int f) {
  if (va > vb) std::swap(va, vb);
  for (int i = 0; i < (int)duples.size(); ++i) {
    const Edge& e = p.edges()[duples[i].edge];
    if (e.a == va && e.b == vb && duples[i].face == f) return i;
  }
  FAIL("duple not found");
  return -1;
}

}  // namespace

TEST_CASE("every edge yields exactly two duples with opposite directions",
          "[compensation]") {
  Polyhedron p = cube();
  auto duples = enumerate_duples(p);
  REQUIRE(duples.size() == 2 * p.edge_count());
  for (size_t i = 0; i < duples.size(); i += 2) {
    const Duple& d1 = duples[i];
    const Duple& d2 = duples[i + 1];
    CHECK(d1.edge == d2.edge);
    CHECK(d1.face != d2.face);
    CHECK(std::abs(norm(d1.dir) - 1.0) < 1e-12);
    CHECK(opposite_direction(d1.dir, d2.dir));
    // The duple direction runs along the edge.
    const Edge& e = p.edges()[d1.edge];
    CHECK(parallel(d1.dir, p.vertex(e.b) - p.vertex(e.a)));
  }
}

TEST_CASE("duple direction follows the clockwise-from-outside convention",
          "[compensation]") {
  // Cube top face, CCW from above.  For the duple (edge, top) the direction
  // must be the reverse of the CCW traversal, i.e. clockwise seen from
  // outside (above).
  Polyhedron p = cube();
  int top = face_with_label(p, "top");
  auto duples = enumerate_duples(p);
  const auto& loop = p.face(top);
  for (size_t i = 0; i < loop.size(); ++i) {
    int u = loop[i], v = loop[(i + 1) % loop.size()];
    int d = find_duple(p, duples, u, v, top);
    // CCW traversal goes u -> v; the duple direction is v -> u reversed.
    CHECK(same_direction(duples[d].dir, p.vertex(u) - p.vertex(v)));
  }
}

TEST_CASE("compensation truth table on two parallel cube faces",
          "[compensation]") {
  // Configuration: f1 = top face, f2 = bottom face of the cube.
  //   e1 = top edge at y=-1, e2 = top edge at y=+1 (opposite ends of f1),
  //   e4 = bottom edge at y=-1 (below e1), e3 = bottom edge at y=+1.
  // Hand evaluation of the direction convention gives: (e1,f1) pairs with
  // (e2,f1) (same face, opposite ends) and with (e4,f2) (parallel faces,
  // same side), but not with (e3,f2) (parallel faces, far side: directions
  // agree instead of opposing).
  Polyhedron p = cube();
  int top = face_with_label(p, "top");
  int bottom = face_with_label(p, "bottom");
  auto duples = enumerate_duples(p);
  int e1f1 = find_duple(p, duples, 4, 5, top);     // (-1,-1,1)-(1,-1,1)
  int e2f1 = find_duple(p, duples, 6, 7, top);     // (1,1,1)-(-1,1,1)
  int e4f2 = find_duple(p, duples, 0, 1, bottom);  // (-1,-1,-1)-(1,-1,-1)
  int e3f2 = find_duple(p, duples, 2, 3, bottom);  // (1,1,-1)-(-1,1,-1)
  CHECK(compensates(p, duples[e1f1], duples[e2f1]));
  CHECK(compensates(p, duples[e1f1], duples[e4f2]));
  CHECK_FALSE(compensates(p, duples[e1f1], duples[e3f2]));
  // Symmetry of the relation.
  CHECK(compensates(p, duples[e2f1], duples[e1f1]));
  // A duple never compensates itself or its edge twin.
  CHECK_FALSE(compensates(p, duples[e1f1], duples[e1f1]));
  int twin = find_duple(p, duples, 4, 5, face_with_label(p, "y-"));
  CHECK_FALSE(compensates(p, duples[e1f1], duples[twin]));
}

TEST_CASE("perpendicular edges never compensate", "[compensation]") {
  Polyhedron p = cube();
  int top = face_with_label(p, "top");
  auto duples = enumerate_duples(p);
  int a = find_duple(p, duples, 4, 5, top);
  int b = find_duple(p, duples, 5, 6, top);
  CHECK_FALSE(compensates(p, duples[a], duples[b]));
}

TEST_CASE("compensation graph degree bound", "[compensation]") {
  // Degree is at most 2 everywhere.  On the cube every duple has exactly the
  // two partners from the truth-table test; on the tetrahedron no edges are
  // parallel at all, so the graph is empty.
  Polyhedron c = cube();
  auto dc = enumerate_duples(c);
  auto adj = compensation_graph(c, dc);
  for (const auto& nb : adj) CHECK(nb.size() == 2);
  Polyhedron t = tetrahedron();
  auto dt = enumerate_duples(t);
  auto adjt = compensation_graph(t, dt);
  REQUIRE(adjt.size() == 12);
  for (const auto& nb : adjt) CHECK(nb.empty());
}

TEST_CASE("recognizer accepts the cube with a valid certificate",
          "[compensation]") {
  Polyhedron p = cube();
  Decision d = decide(p);
  REQUIRE(d.equiprojective);
  REQUIRE(d.certificate.has_value());
  CHECK(d.certificate->pairs.size() == p.edge_count());  // 24 duples, 12 pairs
  CheckResult r = check_certificate(p, *d.certificate);
  CHECK(r.ok);
}

TEST_CASE("recognizer accepts prisms", "[compensation]") {
  for (int k : {3, 4, 5, 6, 7, 8}) {
    Polyhedron p = prism(k);
    Decision d = decide(p);
    REQUIRE(d.equiprojective);
    CHECK(check_certificate(p, *d.certificate).ok);
  }
}

TEST_CASE("recognizer refutes the tetrahedron", "[compensation]") {
  Decision d = decide(tetrahedron());
  REQUIRE_FALSE(d.equiprojective);
  REQUIRE(d.refutation.has_value());
  CHECK_FALSE(d.refutation->witness_duples.empty());
  CHECK_FALSE(d.certificate.has_value());
}

TEST_CASE("recognizer refutes pyramid, cupola and rotunda", "[compensation]") {
  CHECK_FALSE(decide(square_pyramid()).equiprojective);
  CHECK_FALSE(decide(triangular_cupola()).equiprojective);
  CHECK_FALSE(decide(pentagonal_rotunda()).equiprojective);
}

TEST_CASE("recognizer refutes the octahedron despite parallel faces",
          "[compensation]") {
  // All four face-pairs of the octahedron are parallel, but opposite faces
  // are related by central inversion: corresponding duples come out with the
  // SAME direction, so nothing compensates and the octahedron is not
  // equiprojective.
  Polyhedron oct = Polyhedron::hull_of(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(oct.parallel_face_pairs().size() == 4);
  Decision d = decide(oct);
  CHECK_FALSE(d.equiprojective);
}

TEST_CASE("recognizer accepts all three zonohedra", "[compensation]") {
  for (const Polyhedron& p : {rhombic_dodecahedron(), truncated_octahedron(),
                              truncated_cuboctahedron()}) {
    Decision d = decide(p);
    REQUIRE(d.equiprojective);
    CHECK(check_certificate(p, *d.certificate).ok);
  }
}

TEST_CASE("self-compensation of individual faces", "[compensation]") {
  // Any parallelogram face compensates itself: two pairs of parallel edges
  // at opposite ends.  A triangular face cannot.
  Polyhedron rd = rhombic_dodecahedron();
  for (int f = 0; f < rd.face_count(); ++f) {
    REQUIRE(rd.face(f).size() == 4);
    CHECK(is_self_compensating(rd, f));
  }
  Polyhedron cup = triangular_cupola();
  CHECK_FALSE(is_self_compensating(cup, face_with_label(cup, "tri0")));
  CHECK(is_self_compensating(cup, face_with_label(cup, "sq0")));
  // Regular hexagon face: opposite edges pair up in-face.
  Polyhedron to = truncated_octahedron();
  for (int f = 0; f < to.face_count(); ++f) {
    if (to.face(f).size() == 6) CHECK(is_self_compensating(to, f));
  }
}

TEST_CASE("certificate checker rejects tampered certificates",
          "[compensation]") {
  Polyhedron p = cube();
  Decision d = decide(p);
  REQUIRE(d.certificate.has_value());
  Certificate bad = *d.certificate;
  // Duplicate one pair entry: no longer a partition.
  bad.pairs[0] = bad.pairs[1];
  CHECK_FALSE(check_certificate(p, bad).ok);
  // Cross-wire two pairs: partition still holds but geometry fails.
  Certificate crossed = *d.certificate;
  std::swap(crossed.pairs[0].second, crossed.pairs[1].second);
  CHECK_FALSE(check_certificate(p, crossed).ok);
  // Out-of-range index.
  Certificate oob = *d.certificate;
  oob.pairs[0].first = 999;
  CHECK_FALSE(check_certificate(p, oob).ok);
}

TEST_CASE("certificates cover every duple exactly once", "[compensation]") {
  Polyhedron p = truncated_octahedron();
  Decision d = decide(p);
  REQUIRE(d.equiprojective);
  std::set<int> covered;
  for (auto [i, j] : d.certificate->pairs) {
    CHECK(compensates(p, d.duples[i], d.duples[j]));
    covered.insert(i);
    covered.insert(j);
  }
  CHECK(covered.size() == d.duples.size());
}
