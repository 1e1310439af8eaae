#pragma once

// Edge-face duples, the compensation relation, and the decision procedure.
//
// Every edge e of a convex polyhedron, taken with one of its two incident
// faces f, forms a duple (e, f).  The duple's direction is the unit vector
// along e as e is traversed when walking clockwise around the outside of f;
// with faces stored CCW from outside this is the reverse of the stored
// order.  Two duples compensate when their edges are parallel, their faces
// are identical or parallel-distinct, and their directions are opposite.
//
// A polyhedron casts a shadow with the same number of corners in every
// generic direction exactly when its 2E duples split into disjoint
// compensating pairs.  decide() builds the compensation graph (degree <= 2
// on genuine convex solids) and searches each connected component for a
// perfect matching, producing either a certificate (the full pairing) or a
// refutation naming a component that cannot be matched.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equiproj/core.hpp"
#include "equiproj/polyhedron.hpp"

namespace equiproj {

struct Duple {
  int edge = -1;  // index into Polyhedron::edges()
  int face = -1;  // index into Polyhedron::faces()
  Vec3 dir;       // unit vector, clockwise-from-outside traversal of face
};

// Canonical duple enumeration: for each edge in table order, first the
// duple with the edge's `left` face, then with its `right` face.  The
// directions of an edge's two duples are opposite.
inline std::vector<Duple> enumerate_duples(const Polyhedron& p) {
  std::vector<Duple> out;
  out.reserve(2 * p.edge_count());
  for (int ei = 0; ei < static_cast<int>(p.edge_count()); ++ei) {
    const Edge& e = p.edges()[static_cast<size_t>(ei)];
    // `left` traverses the edge a->b in CCW order, so the clockwise
    // (outside) traversal runs b->a: direction a - b.  Mirrored for right.
    Vec3 ab = normalized(p.vertex(e.a) - p.vertex(e.b));
    out.push_back(Duple{ei, e.left, ab});
    out.push_back(Duple{ei, e.right, -ab});
  }
  return out;
}

// Compensation predicate.  Self-pairing of an edge's own two duples is
// impossible because their faces meet along that edge and hence are neither
// identical nor parallel.
inline bool compensates(const Polyhedron& p, const Duple& d1, const Duple& d2,
                        Scalar eps = kEps) {
  const Edge& e1 = p.edges()[static_cast<size_t>(d1.edge)];
  const Edge& e2 = p.edges()[static_cast<size_t>(d2.edge)];
  if (!parallel(p.vertex(e1.b) - p.vertex(e1.a),
                p.vertex(e2.b) - p.vertex(e2.a), eps))
    return false;
  bool faces_ok =
      d1.face == d2.face ||
      opposite_direction(p.face_normal(d1.face), p.face_normal(d2.face), eps);
  if (!faces_ok) return false;
  return opposite_direction(d1.dir, d2.dir, eps);
}

// Adjacency lists of the compensation graph over the canonical duples.
inline std::vector<std::vector<int>> compensation_graph(
    const Polyhedron& p, const std::vector<Duple>& duples, Scalar eps = kEps) {
  const int n = static_cast<int>(duples.size());
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (compensates(p, duples[static_cast<size_t>(i)],
                      duples[static_cast<size_t>(j)], eps)) {
        adj[static_cast<size_t>(i)].push_back(j);
        adj[static_cast<size_t>(j)].push_back(i);
      }
  return adj;
}

struct Certificate {
  // Disjoint compensating pairs covering all duples; each pair (i, j) with
  // i < j, sorted by first element.
  std::vector<std::pair<int, int>> pairs;
};

struct Refutation {
  std::string reason;
  std::vector<int> witness_duples;  // a component with no perfect matching
};

struct Decision {
  bool equiprojective = false;
  std::vector<Duple> duples;
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;
};

namespace detail {

// Exhaustive perfect-matching search within one component.  Components of
// the compensation graph are paths and cycles (degree <= 2), so the search
// is effectively linear; trying partners in increasing index order makes
// the returned matching the lexicographically smallest one.
inline bool match_component(const std::vector<int>& comp,
                            const std::vector<std::vector<int>>& adj,
                            std::vector<int>& mate) {
  int u = -1;
  for (int v : comp)
    if (mate[static_cast<size_t>(v)] < 0) { u = v; break; }
  if (u < 0) return true;
  for (int w : adj[static_cast<size_t>(u)]) {
    if (mate[static_cast<size_t>(w)] >= 0) continue;
    mate[static_cast<size_t>(u)] = w;
    mate[static_cast<size_t>(w)] = u;
    if (match_component(comp, adj, mate)) return true;
    mate[static_cast<size_t>(u)] = -1;
    mate[static_cast<size_t>(w)] = -1;
  }
  return false;
}

}  // namespace detail

inline Decision decide(const Polyhedron& p, Scalar eps = kEps) {
  Decision d;
  d.duples = enumerate_duples(p);
  const int n = static_cast<int>(d.duples.size());
  std::vector<std::vector<int>> adj = compensation_graph(p, d.duples, eps);

  std::vector<int> comp_id(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (comp_id[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> comp, stack{i};
    comp_id[static_cast<size_t>(i)] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[static_cast<size_t>(u)])
        if (comp_id[static_cast<size_t>(w)] < 0) {
          comp_id[static_cast<size_t>(w)] = static_cast<int>(comps.size());
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }

  std::vector<int> mate(static_cast<size_t>(n), -1);
  for (const auto& comp : comps) {
    if (comp.size() % 2 != 0 || !detail::match_component(comp, adj, mate)) {
      for (int v : comp) mate[static_cast<size_t>(v)] = -1;
      d.equiprojective = false;
      Refutation r;
      r.reason = comp.size() == 1
                     ? "duple admits no compensating partner"
                     : "compensation component has no perfect matching";
      r.witness_duples = comp;
      d.refutation = std::move(r);
      return d;
    }
  }

  Certificate cert;
  for (int i = 0; i < n; ++i)
    if (mate[static_cast<size_t>(i)] > i)
      cert.pairs.emplace_back(i, mate[static_cast<size_t>(i)]);
  d.equiprojective = true;
  d.certificate = std::move(cert);
  return d;
}

// True when every duple of face fi compensates with another duple of the
// same face (the face's edges pair among themselves).
inline bool is_self_compensating(const Polyhedron& p, int fi, Scalar eps = kEps) {
  std::vector<Duple> duples = enumerate_duples(p);
  std::vector<int> mine;
  for (int i = 0; i < static_cast<int>(duples.size()); ++i)
    if (duples[static_cast<size_t>(i)].face == fi) mine.push_back(i);
  for (int i : mine) {
    bool found = false;
    for (int j : mine)
      if (i != j && compensates(p, duples[static_cast<size_t>(i)],
                                duples[static_cast<size_t>(j)], eps)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return !mine.empty();
}

struct CheckResult {
  bool ok = false;
  std::string message;
};

// Independent certificate verification: re-derives the duple set from the
// polyhedron and checks, pair by pair and from raw coordinates only, that
// the proposed pairing is a partition into compensating pairs.
inline CheckResult check_certificate(const Polyhedron& p,
                                     const Certificate& cert,
                                     Scalar eps = kEps) {
  const int n = static_cast<int>(2 * p.edge_count());
  std::vector<int> seen(static_cast<size_t>(n), 0);
  for (const auto& [i, j] : cert.pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      return {false, "certificate references an invalid duple index"};
    ++seen[static_cast<size_t>(i)];
    ++seen[static_cast<size_t>(j)];
  }
  for (int i = 0; i < n; ++i)
    if (seen[static_cast<size_t>(i)] != 1)
      return {false, "certificate is not a partition: duple " +
                         std::to_string(i) + " covered " +
                         std::to_string(seen[static_cast<size_t>(i)]) +
                         " times"};

  auto duple_of = [&](int id) {
    const Edge& e = p.edges()[static_cast<size_t>(id / 2)];
    int face = (id % 2 == 0) ? e.left : e.right;
    Vec3 ab = normalized(p.vertex(e.a) - p.vertex(e.b));
    return Duple{id / 2, face, id % 2 == 0 ? ab : -ab};
  };
  for (const auto& [i, j] : cert.pairs) {
    Duple a = duple_of(i), b = duple_of(j);
    const Edge& ea = p.edges()[static_cast<size_t>(a.edge)];
    const Edge& eb = p.edges()[static_cast<size_t>(b.edge)];
    if (!parallel(p.vertex(ea.b) - p.vertex(ea.a),
                  p.vertex(eb.b) - p.vertex(eb.a), eps))
      return {false, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                         "): edges not parallel"};
    if (!(a.face == b.face ||
          opposite_direction(p.face_normal(a.face), p.face_normal(b.face), eps)))
      return {false, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                         "): faces neither identical nor parallel"};
    if (!opposite_direction(a.dir, b.dir, eps))
      return {false, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                         "): directions not opposite"};
  }
  return {true, "certificate valid"};
}

}  // namespace equiproj
