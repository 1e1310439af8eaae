// Equiprojective constructions: truncation solids, half-and-reglue
// derivatives and twisted biprisms.  The vertex/edge/face counts, parallel
// face pair counts, face-size censuses and silhouette counts asserted here
// were measured once with the decision procedure cross-checked against the
// sampled shadow oracle, then frozen as regression values.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <set>

#include "equiproj/compensation.hpp"
#include "equiproj/constructions.hpp"
#include "equiproj/shadow.hpp"

using namespace equiproj;

namespace {

// Enough deterministic samples to pin down k while keeping the suite fast.
constexpr int kSamples = 400;

struct Census {
  std::size_t v, e, f;
  std::map<std::size_t, int> face_sizes;
};

Census census(const Polyhedron& p) {
  Census c{p.vertex_count(), p.edge_count(), p.face_count(), {}};
  for (int f = 0; f < (int)p.face_count(); ++f) c.face_sizes[p.face(f).size()]++;
  return c;
}

// decide() and the shadow oracle must agree that p casts a constant k-gon.
int certified_k(const Polyhedron& p) {
  const Decision d = decide(p);
  REQUIRE(d.equiprojective);
  REQUIRE(d.certificate.has_value());
  REQUIRE(check_certificate(p, *d.certificate).ok);
  const ShadowReport s = measure_k(p, kSamples);
  REQUIRE(s.constant);
  return s.k;
}

// Side lengths of one face, in loop order.
std::vector<Scalar> side_lengths(const Polyhedron& p, int f) {
  const auto& loop = p.face(f);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < loop.size(); ++i)
    out.push_back(distance(p.vertex(loop[i]),
                           p.vertex(loop[(i + 1) % loop.size()])));
  return out;
}

Scalar pairwise_distance_sum(const Polyhedron& p) {
  Scalar s = 0;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < p.vertex_count(); ++j)
      s += distance(p.vertices()[i], p.vertices()[j]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Truncation constructions
// ---------------------------------------------------------------------------

TEST_CASE("equitruncated tetrahedron is 10-equiprojective", "[constructions]") {
  const Polyhedron p = equitruncated_tetrahedron();
  const Census c = census(p);
  CHECK(c.v == 15);
  CHECK(c.e == 24);
  CHECK(c.f == 11);
  CHECK(p.parallel_face_pairs().size() == 4);
  CHECK(certified_k(p) == 10);
}

TEST_CASE("skew pyramid variant matches the regular one", "[constructions]") {
  const Polyhedron p = equitruncated_tetrahedron_skew();
  const Census c = census(p);
  CHECK(c.v == 15);
  CHECK(c.e == 24);
  CHECK(c.f == 11);
  CHECK(certified_k(p) == 10);
}

TEST_CASE("equitruncated pyramid is 10-equiprojective", "[constructions]") {
  const Polyhedron p = equitruncated_pyramid();
  const Census c = census(p);
  CHECK(c.v == 16);
  CHECK(c.e == 24);
  CHECK(c.f == 10);
  CHECK(p.parallel_face_pairs().size() == 3);
  CHECK(certified_k(p) == 10);
}

TEST_CASE("equitruncated triangular cupola is 11-equiprojective",
          "[constructions]") {
  const Polyhedron p = equitruncated_triangular_cupola();
  const Census c = census(p);
  CHECK(c.v == 20);
  CHECK(c.e == 30);
  CHECK(c.f == 12);
  CHECK(p.parallel_face_pairs().size() == 3);
  CHECK(certified_k(p) == 11);
}

TEST_CASE("equitruncated pentagonal rotunda variants", "[constructions]") {
  const Polyhedron v1 = equitruncated_pentagonal_rotunda(1);
  Census c = census(v1);
  CHECK(c.v == 62);
  CHECK(c.e == 93);
  CHECK(c.f == 33);
  CHECK(v1.parallel_face_pairs().size() == 6);
  CHECK(certified_k(v1) == 21);

  const Polyhedron v2 = equitruncated_pentagonal_rotunda(2);
  c = census(v2);
  CHECK(c.v == 66);
  CHECK(c.e == 99);
  CHECK(c.f == 35);
  CHECK(v2.parallel_face_pairs().size() == 6);
  CHECK(certified_k(v2) == 23);

  CHECK_THROWS_AS(equitruncated_pentagonal_rotunda(3), GeomError);
  CHECK_THROWS_AS(equitruncated_pentagonal_rotunda(1, 0.6), GeomError);
}

TEST_CASE("raw seeds of the truncations are not equiprojective",
          "[constructions]") {
  for (const Polyhedron& p :
       {tetrahedron(), square_pyramid(), triangular_cupola(),
        pentagonal_rotunda()}) {
    const Decision d = decide(p);
    CHECK_FALSE(d.equiprojective);
    REQUIRE(d.refutation.has_value());
    CHECK_FALSE(d.refutation->witness_duples.empty());
    const ShadowReport s = measure_k(p, kSamples);
    CHECK_FALSE(s.constant);
  }
}

// ---------------------------------------------------------------------------
// Half-and-reglue pieces
// ---------------------------------------------------------------------------

TEST_CASE("glue pieces are equiprojective on their own", "[constructions]") {
  // Each piece is a half (or cap) of its seed whose section has been made
  // gluable; all its duples compensate within the piece, the base pairing
  // with itself, so any valid re-gluing stays equiprojective.
  struct PieceCase {
    Polyhedron piece;
    std::size_t v, e, f, pairs, base_size;
    int k;
  };
  const PieceCase cases[] = {
      {detail::rd_half_piece(), 10, 16, 8, 2, 6, 7},
      {detail::to_cap_piece(), 16, 24, 10, 3, 8, 10},
      {detail::tc_cap_piece(), 24, 36, 14, 3, 8, 12},
      {detail::tc_half_piece(), 30, 45, 17, 4, 12, 15},
  };
  for (const PieceCase& pc : cases) {
    const Census c = census(pc.piece);
    CHECK(c.v == pc.v);
    CHECK(c.e == pc.e);
    CHECK(c.f == pc.f);
    CHECK(pc.piece.parallel_face_pairs().size() == pc.pairs);
    const int base = face_with_label(pc.piece, "base");
    CHECK(pc.piece.face(base).size() == pc.base_size);
    CHECK(is_self_compensating(pc.piece, base));
    CHECK(certified_k(pc.piece) == pc.k);
  }
}

TEST_CASE("glue piece bases are equiangular sections", "[constructions]") {
  // Every base polygon has equal interior angles, so a cut parallel to the
  // section can be slid until the sides even out; the slide position below
  // realises equal sides for the two octagon caps, and the hexagon base is
  // normalised to the regular one by a stretch along the cut normal.
  const Scalar s2 = std::sqrt(2.0);

  const Polyhedron rd = detail::rd_half_piece();
  for (Scalar s : side_lengths(rd, face_with_label(rd, "base")))
    CHECK(s == Catch::Approx(2.0));

  const Polyhedron to = detail::to_cap_piece();
  for (Scalar s : side_lengths(to, face_with_label(to, "base")))
    CHECK(s == Catch::Approx(4.0 * (s2 - 1.0)));

  const Polyhedron tc = detail::tc_cap_piece();
  for (Scalar s : side_lengths(tc, face_with_label(tc, "base")))
    CHECK(s == Catch::Approx(6.0 - 2.0 * s2));

  // The 12-gon section cannot be made regular by sliding: its sides come in
  // two alternating families that change at the same rate.  Gluing only
  // needs the base to be congruent to itself rotated by a full period.
  const Polyhedron th = detail::tc_half_piece();
  const std::vector<Scalar> sides =
      side_lengths(th, face_with_label(th, "base"));
  REQUIRE(sides.size() == 12);
  for (std::size_t i = 0; i < 12; i += 2) {
    CHECK(sides[i] == Catch::Approx(sides[0]));
    CHECK(sides[i + 1] == Catch::Approx(sides[1]));
  }
  CHECK(std::min(sides[0], sides[1]) == Catch::Approx(3.0 - s2 / 2.0));
  CHECK(std::max(sides[0], sides[1]) == Catch::Approx(std::sqrt(6.0)));
}

// ---------------------------------------------------------------------------
// Half-and-reglue solids
// ---------------------------------------------------------------------------

TEST_CASE("reglued rhombic dodecahedron halves are 8-equiprojective",
          "[constructions]") {
  const Polyhedron p = equitruncated_rhombic_dodecahedron();
  const Census c = census(p);
  CHECK(c.v == 14);
  CHECK(c.e == 26);
  CHECK(c.f == 14);
  CHECK(c.face_sizes == std::map<std::size_t, int>{{3, 4}, {4, 10}});
  CHECK(certified_k(p) == 8);
}

TEST_CASE("reglued truncated octahedron halves are 12-equiprojective",
          "[constructions]") {
  const Polyhedron p = equitruncated_octahedron();
  const Census c = census(p);
  CHECK(c.v == 24);
  CHECK(c.e == 40);
  CHECK(c.f == 18);
  CHECK(c.face_sizes == std::map<std::size_t, int>{{3, 8}, {4, 2}, {6, 8}});
  CHECK(certified_k(p) == 12);
}

TEST_CASE("truncated cuboctahedron cap variant is 16-equiprojective",
          "[constructions]") {
  const Polyhedron p = equitruncated_cuboctahedron(1);
  const Census c = census(p);
  CHECK(c.v == 40);
  CHECK(c.e == 64);
  CHECK(c.f == 26);
  CHECK(c.face_sizes == std::map<std::size_t, int>{{4, 16}, {6, 8}, {8, 2}});
  CHECK(certified_k(p) == 16);
}

TEST_CASE("truncated cuboctahedron half variants are 18-equiprojective",
          "[constructions]") {
  const Polyhedron p2 = equitruncated_cuboctahedron(2);
  const Polyhedron p3 = equitruncated_cuboctahedron(3);
  for (const Polyhedron* p : {&p2, &p3}) {
    const Census c = census(*p);
    CHECK(c.v == 48);
    CHECK(c.e == 72);
    CHECK(c.f == 26);
    // Same face-size census as the seed: 12 quads, 8 hexagons, 6 octagons.
    CHECK(c.face_sizes == std::map<std::size_t, int>{{4, 12}, {6, 8}, {8, 6}});
    CHECK(certified_k(*p) == 18);
  }

  // The two rotations give genuinely different solids: variant 2 lines the
  // seam octagons up with octagons (few parallel face pairs survive),
  // variant 3 lines octagons up with hexagons.
  CHECK(p2.parallel_face_pairs().size() == 4);
  CHECK(p3.parallel_face_pairs().size() == 13);
  CHECK(std::abs(pairwise_distance_sum(p2) - pairwise_distance_sum(p3)) > 1.0);
}

TEST_CASE("half_and_reglue validates its variant", "[constructions]") {
  CHECK_THROWS_AS(half_and_reglue(ZonoSource::kRhombicDodecahedron, 2),
                  GeomError);
  CHECK_THROWS_AS(half_and_reglue(ZonoSource::kTruncatedOctahedron, 0),
                  GeomError);
  CHECK_THROWS_AS(half_and_reglue(ZonoSource::kTruncatedCuboctahedron, 4),
                  GeomError);
}

// ---------------------------------------------------------------------------
// Twisted biprisms
// ---------------------------------------------------------------------------

TEST_CASE("biprism silhouette count is the sum of the prism counts",
          "[constructions]") {
  for (int k1 = 3; k1 <= 6; ++k1) {
    for (int k2 = k1; k2 <= 6; ++k2) {
      const Polyhedron p = biprism(k1, k2);
      const Census c = census(p);
      CHECK(c.v == std::size_t(2 * (k1 + k2) - 4));
      CHECK(c.e == std::size_t(3 * (k1 + k2) - 4));
      CHECK(c.f == std::size_t(k1 + k2 + 2));
      CHECK(certified_k(p) == k1 + k2);
    }
  }
  CHECK_THROWS_AS(biprism(2, 4), GeomError);
}

TEST_CASE("gyrobifastigium is the 3,3 biprism", "[constructions]") {
  const Polyhedron p = gyrobifastigium();
  const Census c = census(p);
  CHECK(c.v == 8);
  CHECK(c.e == 14);
  CHECK(c.f == 8);
  CHECK(c.face_sizes == std::map<std::size_t, int>{{3, 4}, {4, 4}});
  CHECK(certified_k(p) == 6);
}

// ---------------------------------------------------------------------------
// Zonohedra and catalog
// ---------------------------------------------------------------------------

TEST_CASE("zonohedron faces are all self-compensating", "[constructions]") {
  for (const Polyhedron& z : {rhombic_dodecahedron(), truncated_octahedron(),
                              truncated_cuboctahedron()}) {
    for (int f = 0; f < (int)z.face_count(); ++f)
      CHECK(is_self_compensating(z, f));
    CHECK(decide(z).equiprojective);
  }
}

TEST_CASE("catalog entries are unique, buildable and findable",
          "[constructions]") {
  std::set<std::string> names;
  int with_k = 0, controls = 0;
  for (const CatalogEntry& e : catalog()) {
    CHECK(names.insert(e.name).second);
    const Polyhedron p = e.build();  // build() validates the mesh
    CHECK(p.vertex_count() >= 4);
    if (e.expected_k) {
      ++with_k;
      CHECK(*e.expected_k >= 5);
    } else {
      ++controls;
    }
  }
  CHECK(with_k == 24);
  CHECK(controls == 4);
  CHECK(find_catalog_entry("cube") != nullptr);
  CHECK(find_catalog_entry("no_such_solid") == nullptr);
  REQUIRE(find_catalog_entry("prism3") != nullptr);
  CHECK(find_catalog_entry("prism3")->expected_k == 5);
}
