#pragma once

// Cut-and-glue operations on convex polyhedra.
//
// cut()  removes the open halfspace {x : n.x > offset} from a polyhedron,
//        capping the hole with a new planar face.  A plane that misses the
//        interior leaves the polyhedron unchanged; a plane passing within
//        tolerance of a vertex raises DegenerateCutError so callers can
//        perturb or switch to a halfspace-intersection build.
//
// glue() welds two polyhedra along a pair of congruent faces.  The second
//        polyhedron is moved by a rigid motion (optionally composed with a
//        mirror reflection) so the chosen faces coincide with opposite
//        outward normals; coplanar face pairs across the seam are merged and
//        the result is re-validated as a convex polyhedron.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equiproj/core.hpp"
#include "equiproj/polyhedron.hpp"

namespace equiproj {

// ---------------------------------------------------------------------------
// cut
// ---------------------------------------------------------------------------

// Keeps the side {x : plane.normal . x <= plane.offset}.
//
//  * plane strictly misses the solid on the keep side   -> returns p unchanged
//  * plane strictly misses the solid on the discard side-> GeomError (empty)
//  * plane within eps_rel*diag of any vertex            -> DegenerateCutError
//  * otherwise performs the clip and adds a cap face labelled `cap_label`.
inline Polyhedron cut(const Polyhedron& p, const Plane& plane,
                      const std::string& cap_label = "cut",
                      Scalar eps_rel = kMeshEps) {
  const Scalar eps = eps_rel * p.bbox_diag();
  const int nv = p.vertex_count();

  std::vector<Scalar> dist(static_cast<std::size_t>(nv));
  Scalar dmin = std::numeric_limits<Scalar>::max();
  Scalar dmax = -std::numeric_limits<Scalar>::max();
  for (int i = 0; i < nv; ++i) {
    const Scalar d = plane.signed_distance(p.vertex(i));
    dist[static_cast<std::size_t>(i)] = d;
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
    if (std::abs(d) <= eps) {
      std::ostringstream os;
      os << "cut plane passes within tolerance of vertex " << i
         << " (signed distance " << d << ", tolerance " << eps << ")";
      throw DegenerateCutError(os.str());
    }
  }
  if (dmax < 0.0) return p;  // plane misses the interior; nothing removed
  if (dmin > 0.0) throw GeomError("cut removes the entire polyhedron");

  // Crossing point per cut edge, computed once per undirected edge so both
  // incident faces receive bit-identical coordinates.
  std::map<std::pair<int, int>, int> crossing;  // edge -> new vertex index
  std::vector<Vec3> new_vertices;
  std::vector<int> kept_index(static_cast<std::size_t>(nv), -1);
  for (int i = 0; i < nv; ++i) {
    if (dist[static_cast<std::size_t>(i)] < 0.0) {
      kept_index[static_cast<std::size_t>(i)] =
          static_cast<int>(new_vertices.size());
      new_vertices.push_back(p.vertex(i));
    }
  }
  auto crossing_index = [&](int u, int v) {
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = crossing.find(key);
    if (it != crossing.end()) return it->second;
    const Scalar du = dist[static_cast<std::size_t>(key.first)];
    const Scalar dv = dist[static_cast<std::size_t>(key.second)];
    const Scalar t = du / (du - dv);
    const Vec3 a = p.vertex(key.first);
    const Vec3 b = p.vertex(key.second);
    const int idx = static_cast<int>(new_vertices.size());
    new_vertices.push_back(a + (b - a) * t);
    crossing.emplace(key, idx);
    return idx;
  };

  std::vector<std::vector<int>> new_faces;
  std::vector<std::string> new_labels;
  const bool has_labels = !p.labels().empty();
  // Directed chords left by clipped faces; the cap traverses them reversed.
  std::map<int, int> cap_next;  // cap_next[x2] = x1 for face chord (x1, x2)

  for (int f = 0; f < p.face_count(); ++f) {
    const std::vector<int>& loop = p.face(f);
    const std::size_t n = loop.size();
    bool any_kept = false, any_cut = false;
    for (int v : loop) {
      (dist[static_cast<std::size_t>(v)] < 0.0 ? any_kept : any_cut) = true;
    }
    if (!any_kept) continue;  // face entirely discarded
    if (!any_cut) {           // face entirely kept
      std::vector<int> out;
      out.reserve(n);
      for (int v : loop) out.push_back(kept_index[static_cast<std::size_t>(v)]);
      new_faces.push_back(std::move(out));
      if (has_labels) new_labels.push_back(p.face_label(f));
      continue;
    }
    // Clipped face: walk the loop, inserting one exit and one entry crossing.
    std::vector<int> out;
    int exit_x = -1, entry_x = -1;
    for (std::size_t i = 0; i < n; ++i) {
      const int u = loop[i];
      const int v = loop[(i + 1) % n];
      const bool ku = dist[static_cast<std::size_t>(u)] < 0.0;
      const bool kv = dist[static_cast<std::size_t>(v)] < 0.0;
      if (ku) out.push_back(kept_index[static_cast<std::size_t>(u)]);
      if (ku && !kv) {  // leaving the keep side
        exit_x = crossing_index(u, v);
        out.push_back(exit_x);
      } else if (!ku && kv) {  // re-entering the keep side
        entry_x = crossing_index(u, v);
        out.push_back(entry_x);
      }
    }
    if (exit_x < 0 || entry_x < 0 || exit_x == entry_x) {
      throw GeomError("cut produced a degenerate face chord");
    }
    new_faces.push_back(std::move(out));
    if (has_labels) new_labels.push_back(p.face_label(f));
    // The clipped face contributes directed chord exit -> entry; the cap,
    // seen from outside (the discarded side), traverses entry -> exit.
    if (cap_next.count(entry_x) != 0) {
      throw GeomError("cut chords do not form a simple cap cycle");
    }
    cap_next[entry_x] = exit_x;
  }

  if (cap_next.size() < 3) throw GeomError("cut cap has fewer than 3 edges");
  std::vector<int> cap;
  cap.reserve(cap_next.size());
  int start = cap_next.begin()->first;
  int cur = start;
  do {
    cap.push_back(cur);
    auto it = cap_next.find(cur);
    if (it == cap_next.end()) {
      throw GeomError("cut cap chain is not closed");
    }
    cur = it->second;
  } while (cur != start && cap.size() <= cap_next.size());
  if (cur != start || cap.size() != cap_next.size()) {
    throw GeomError("cut cap chords form more than one cycle");
  }
  new_faces.push_back(std::move(cap));
  if (has_labels) new_labels.push_back(cap_label);

  return Polyhedron::build(std::move(new_vertices), std::move(new_faces),
                           std::move(new_labels));
}

// ---------------------------------------------------------------------------
// glue
// ---------------------------------------------------------------------------

// Correspondence for glue(): vertex i of face_a's loop is welded to vertex
// (shift - i) mod m of face_b's loop.  The index reversal is forced by
// orientation: both loops are counterclockwise from outside, and the faces
// end up facing each other.  With `reflect` set, b is first mirrored through
// the plane of face_b (an improper motion), which yields the correspondence
// (shift + i) mod m instead.
struct GlueSpec {
  int face_a = -1;
  int face_b = -1;
  int shift = 0;
  bool reflect = false;
};

// Mirrors a polyhedron through an arbitrary plane (improper isometry).
// Face loops are reversed so they stay counterclockwise from outside.
inline Polyhedron mirrored_through(const Polyhedron& p, const Plane& plane) {
  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(p.vertex_count()));
  for (int i = 0; i < p.vertex_count(); ++i) {
    const Vec3 v = p.vertex(i);
    verts.push_back(v - plane.normal * (2.0 * plane.signed_distance(v)));
  }
  std::vector<std::vector<int>> faces = p.faces();
  for (auto& loop : faces) std::reverse(loop.begin(), loop.end());
  return Polyhedron::build(std::move(verts), std::move(faces), p.labels());
}

namespace detail {

// Orthonormal frame used to transport b's gluing face onto a's.
struct GlueFrame {
  Vec3 origin, x, y, z;
};

inline Vec3 apply_frame_map(const GlueFrame& from, const GlueFrame& to,
                            const Vec3& v) {
  const Vec3 d = v - from.origin;
  return to.origin + to.x * dot(d, from.x) + to.y * dot(d, from.y) +
         to.z * dot(d, from.z);
}

}  // namespace detail

// Glues polyhedron b onto polyhedron a along faces spec.face_a / spec.face_b.
// Throws GlueError when the faces are not congruent under the requested
// correspondence or when the seam would create a reflex edge; the final
// Polyhedron::build re-validates global convexity.
inline Polyhedron glue(const Polyhedron& a, const Polyhedron& b_in,
                       const GlueSpec& spec) {
  if (spec.face_a < 0 || spec.face_a >= a.face_count() || spec.face_b < 0 ||
      spec.face_b >= b_in.face_count()) {
    throw GlueError("glue face index out of range");
  }
  const Scalar scale = std::max(a.bbox_diag(), b_in.bbox_diag());
  const Scalar tol = kMeshEps * scale;

  Polyhedron b = spec.reflect
                     ? mirrored_through(b_in, b_in.face_plane(spec.face_b))
                     : b_in;

  const std::vector<int>& loop_a = a.face(spec.face_a);
  const std::vector<int>& loop_b = b.face(spec.face_b);
  const std::size_t m = loop_a.size();
  if (loop_b.size() != m) {
    throw GlueError("glued faces have different vertex counts");
  }
  auto sigma = [&](std::size_t i) {
    const long long idx =
        (static_cast<long long>(spec.shift) - static_cast<long long>(i)) %
        static_cast<long long>(m);
    return static_cast<std::size_t>((idx + static_cast<long long>(m)) %
                                    static_cast<long long>(m));
  };

  // Rigid motion: map b's face frame onto a's with opposing normals.  The
  // y axis of the image frame is negated to keep the motion proper.
  detail::GlueFrame fa, fb;
  fa.origin = a.face_centroid(spec.face_a);
  fa.z = a.face_normal(spec.face_a);
  fa.x = normalized(a.vertex(loop_a[0]) - fa.origin);
  fa.x = normalized(fa.x - fa.z * dot(fa.x, fa.z));
  fa.y = cross(fa.z, fa.x);
  fb.origin = b.face_centroid(spec.face_b);
  fb.z = b.face_normal(spec.face_b);
  fb.x = normalized(b.vertex(loop_b[sigma(0)]) - fb.origin);
  fb.x = normalized(fb.x - fb.z * dot(fb.x, fb.z));
  fb.y = cross(fb.z, fb.x);

  detail::GlueFrame target;  // image of fb under the motion
  target.origin = fa.origin;
  target.x = fa.x;
  target.y = fa.y * -1.0;  // proper motion: det(+x, -y, -z) = +1
  target.z = fa.z * -1.0;

  Polyhedron bm = b.transformed(
      [&](const Vec3& v) { return detail::apply_frame_map(fb, target, v); });

  // Congruence check: every seam vertex of b must land on its partner.
  for (std::size_t i = 0; i < m; ++i) {
    const Vec3 pa = a.vertex(loop_a[i]);
    const Vec3 pb = bm.vertex(loop_b[sigma(i)]);
    if (distance(pa, pb) > 10.0 * tol) {
      std::ostringstream os;
      os << "glued faces are not congruent under shift " << spec.shift
         << (spec.reflect ? " (reflected)" : "") << ": seam vertex " << i
         << " mismatch " << distance(pa, pb);
      throw GlueError(os.str());
    }
  }

  // Directed edge -> face lookup tables for the seam neighbourhood.
  auto directed_face = [](const Polyhedron& p) {
    std::map<std::pair<int, int>, int> out;
    for (int f = 0; f < p.face_count(); ++f) {
      const auto& loop = p.face(f);
      const std::size_t n = loop.size();
      for (std::size_t i = 0; i < n; ++i) {
        out[{loop[i], loop[(i + 1) % n]}] = f;
      }
    }
    return out;
  };
  const auto dir_a = directed_face(a);
  const auto dir_b = directed_face(bm);

  // Seam pre-check: for each seam edge find the flanking faces (excluding
  // the glued faces themselves) and classify the joint as convex, coplanar
  // (merge later) or reflex (error).
  struct SeamEdge {
    int va, vb;      // vertex indices in a (seam endpoints, a-loop order)
    int face_on_a;   // face of a across this edge
    int face_on_b;   // face of bm across this edge
    bool coplanar;
  };
  std::vector<SeamEdge> seam;
  seam.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    SeamEdge e;
    e.va = loop_a[i];
    e.vb = loop_a[(i + 1) % m];
    auto ita = dir_a.find({e.vb, e.va});  // neighbour traverses reversed
    const int bu = loop_b[sigma(i + 1 == m ? 0 : i + 1)];
    const int bv = loop_b[sigma(i)];
    auto itb = dir_b.find({bv, bu});
    if (ita == dir_a.end() || itb == dir_b.end()) {
      throw GlueError("seam edge has no neighbouring face");
    }
    e.face_on_a = ita->second;
    e.face_on_b = itb->second;
    const Plane pl = a.face_plane(e.face_on_a);
    Scalar worst = -std::numeric_limits<Scalar>::max();
    for (int v : bm.face(e.face_on_b)) {
      worst = std::max(worst, pl.signed_distance(bm.vertex(v)));
    }
    if (worst > tol) {
      std::ostringstream os;
      os << "glue would create a reflex seam at edge (" << e.va << "," << e.vb
         << "): neighbouring face rises " << worst << " above the seam face";
      throw GlueError(os.str());
    }
    Scalar span = 0.0;
    for (int v : bm.face(e.face_on_b)) {
      span = std::max(span, std::abs(pl.signed_distance(bm.vertex(v))));
    }
    e.coplanar = span <= tol;
    seam.push_back(e);
  }

  // Assemble the union mesh.  Vertices of bm on the seam map to a's.
  std::vector<Vec3> verts;
  for (int i = 0; i < a.vertex_count(); ++i) verts.push_back(a.vertex(i));
  std::vector<int> bmap(static_cast<std::size_t>(bm.vertex_count()), -1);
  for (std::size_t i = 0; i < m; ++i) {
    bmap[static_cast<std::size_t>(loop_b[sigma(i)])] = loop_a[i];
  }
  for (int i = 0; i < bm.vertex_count(); ++i) {
    if (bmap[static_cast<std::size_t>(i)] < 0) {
      bmap[static_cast<std::size_t>(i)] = static_cast<int>(verts.size());
      verts.push_back(bm.vertex(i));
    }
  }

  const bool has_labels = !a.labels().empty() && !b.labels().empty();
  struct FaceRec {
    std::vector<int> loop;
    std::string label;
    bool alive = true;
  };
  std::vector<FaceRec> recs;
  std::vector<int> a_face_rec(static_cast<std::size_t>(a.face_count()), -1);
  std::vector<int> b_face_rec(static_cast<std::size_t>(bm.face_count()), -1);
  for (int f = 0; f < a.face_count(); ++f) {
    if (f == spec.face_a) continue;
    FaceRec r;
    r.loop = a.face(f);
    if (has_labels) r.label = a.face_label(f);
    a_face_rec[static_cast<std::size_t>(f)] = static_cast<int>(recs.size());
    recs.push_back(std::move(r));
  }
  for (int f = 0; f < bm.face_count(); ++f) {
    if (f == spec.face_b) continue;
    FaceRec r;
    for (int v : bm.face(f)) r.loop.push_back(bmap[static_cast<std::size_t>(v)]);
    if (has_labels) r.label = bm.face_label(f);
    b_face_rec[static_cast<std::size_t>(f)] = static_cast<int>(recs.size());
    recs.push_back(std::move(r));
  }

  // Merge coplanar seam pairs by splicing b's loop into a's across the
  // shared edge, following merged faces through union-find style jumps so a
  // face produced by one merge can participate in the next.
  std::vector<int> merged_into(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) merged_into[i] = static_cast<int>(i);
  auto resolve = [&](int r) {
    while (merged_into[static_cast<std::size_t>(r)] != r) {
      r = merged_into[static_cast<std::size_t>(r)];
    }
    return r;
  };
  for (const SeamEdge& e : seam) {
    if (!e.coplanar) continue;
    const int ra = resolve(a_face_rec[static_cast<std::size_t>(e.face_on_a)]);
    const int rb = resolve(b_face_rec[static_cast<std::size_t>(e.face_on_b)]);
    if (ra == rb) continue;  // already merged through an earlier seam edge
    std::vector<int>& la = recs[static_cast<std::size_t>(ra)].loop;
    std::vector<int>& lb = recs[static_cast<std::size_t>(rb)].loop;
    // la traverses vb -> va, lb traverses va -> vb along the shared edge.
    auto find_dir = [](const std::vector<int>& loop, int u, int v) {
      const std::size_t n = loop.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (loop[i] == u && loop[(i + 1) % n] == v) return static_cast<int>(i);
      }
      return -1;
    };
    const int ia = find_dir(la, e.vb, e.va);
    const int ib = find_dir(lb, e.va, e.vb);
    if (ia < 0 || ib < 0) throw GlueError("seam merge lost the shared edge");
    std::vector<int> merged;
    merged.reserve(la.size() + lb.size() - 2);
    const std::size_t na = la.size(), nb = lb.size();
    // Walk a's loop starting at va (after the seam edge) all the way around
    // to vb: all na vertices, since the cycle re-enters the seam at vb.
    for (std::size_t k = 0; k < na; ++k) {
      merged.push_back(la[(static_cast<std::size_t>(ia) + 1 + k) % na]);
    }
    // Continue around b's loop between the seam endpoints (exclusive).
    for (std::size_t k = 0; k + 2 < nb; ++k) {
      merged.push_back(lb[(static_cast<std::size_t>(ib) + 2 + k) % nb]);
    }
    recs[static_cast<std::size_t>(ra)].loop = std::move(merged);
    recs[static_cast<std::size_t>(rb)].alive = false;
    merged_into[static_cast<std::size_t>(rb)] = ra;
  }

  // Drop collinear mid-vertices introduced where merged faces continue
  // straight across old seam endpoints.
  const Scalar turn_tol = kMeshEps * scale;
  for (FaceRec& r : recs) {
    if (!r.alive) continue;
    bool changed = true;
    while (changed && r.loop.size() > 3) {
      changed = false;
      const std::size_t n = r.loop.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec3 prev = verts[static_cast<std::size_t>(r.loop[(i + n - 1) % n])];
        const Vec3 cur = verts[static_cast<std::size_t>(r.loop[i])];
        const Vec3 next = verts[static_cast<std::size_t>(r.loop[(i + 1) % n])];
        if (norm(cross(cur - prev, next - cur)) <=
            turn_tol * std::max(norm(cur - prev), norm(next - cur))) {
          r.loop.erase(r.loop.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
  }

  // Compact vertices and emit.
  std::vector<int> remap(verts.size(), -1);
  std::vector<Vec3> out_verts;
  std::vector<std::vector<int>> out_faces;
  std::vector<std::string> out_labels;
  for (const FaceRec& r : recs) {
    if (!r.alive) continue;
    std::vector<int> loop;
    loop.reserve(r.loop.size());
    for (int v : r.loop) {
      if (remap[static_cast<std::size_t>(v)] < 0) {
        remap[static_cast<std::size_t>(v)] = static_cast<int>(out_verts.size());
        out_verts.push_back(verts[static_cast<std::size_t>(v)]);
      }
      loop.push_back(remap[static_cast<std::size_t>(v)]);
    }
    out_faces.push_back(std::move(loop));
    if (has_labels) out_labels.push_back(r.label);
  }
  return Polyhedron::build(std::move(out_verts), std::move(out_faces),
                           std::move(out_labels));
}

}  // namespace equiproj
