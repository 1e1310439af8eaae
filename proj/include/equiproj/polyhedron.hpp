#pragma once

// Validated convex polyhedron: vertices plus face loops wound CCW as seen
// from outside, with a derived edge table.  Construction goes through
// Polyhedron::build(), which enforces the full closed-convex contract and
// throws BuildError with a specific kind on violation:
//
//   * every directed edge appears exactly once (watertight, consistent
//     winding), otherwise OpenMesh / BadOrientation
//   * faces planar, strictly convex, no collinear consecutive vertices
//   * every face plane supports the solid (global convexity), with
//     inward-wound faces reported as BadOrientation
//   * Euler formula V - E + F = 2
//
// Structural tolerances are relative to the bounding-box diagonal with
// relative epsilon kMeshEps.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equiproj/core.hpp"
#include "equiproj/hull.hpp"

namespace equiproj {

// Relative tolerance for structural mesh checks (planarity, convexity,
// vertex coincidence).  Looser than kEps to admit meshes assembled from
// chains of floating-point constructions.
inline constexpr Scalar kMeshEps = 1e-7;

struct Edge {
  int a = -1, b = -1;      // vertex indices, a < b
  int left = -1, right = -1;  // face containing directed (a,b) / (b,a)
};

class Polyhedron {
public:
  Polyhedron() = default;

  static Polyhedron build(std::vector<Vec3> vertices,
                          std::vector<std::vector<int>> faces,
                          std::vector<std::string> labels = {}) {
    Polyhedron p;
    p.verts_ = std::move(vertices);
    p.faces_ = std::move(faces);
    p.labels_ = std::move(labels);
    if (!p.labels_.empty() && p.labels_.size() != p.faces_.size())
      throw BuildError(BuildError::Kind::Degenerate,
                       "label count does not match face count");
    p.validate();
    return p;
  }

  static Polyhedron from_mesh(const HullMesh& m,
                              std::vector<std::string> labels = {}) {
    return build(m.vertices, m.faces, std::move(labels));
  }

  static Polyhedron hull_of(const std::vector<Vec3>& points,
                            Scalar merge_eps = kMeshEps) {
    return from_mesh(hull3d(points, merge_eps));
  }

  // -- accessors ----------------------------------------------------------

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  const std::vector<Vec3>& vertices() const { return verts_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Vec3& vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
  const std::vector<int>& face(int i) const {
    return faces_[static_cast<size_t>(i)];
  }
  const Vec3& face_normal(int i) const {
    return normals_[static_cast<size_t>(i)];
  }
  Scalar face_offset(int i) const { return offsets_[static_cast<size_t>(i)]; }
  Plane face_plane(int i) const {
    return Plane(face_normal(i), face_offset(i));
  }
  std::string face_label(int i) const {
    return labels_.empty() ? std::string() : labels_[static_cast<size_t>(i)];
  }

  Vec3 face_centroid(int i) const {
    Vec3 c{0, 0, 0};
    for (int v : face(i)) c += vertex(v);
    return c / static_cast<Scalar>(face(i).size());
  }

  Scalar bbox_diag() const { return diag_; }

  // Arithmetic mean of the vertices; strictly interior for a convex solid.
  Vec3 interior_point() const {
    Vec3 c{0, 0, 0};
    for (const Vec3& v : verts_) c += v;
    return c / static_cast<Scalar>(verts_.size());
  }

  // Volume via the divergence theorem over the outward-oriented faces.
  Scalar volume() const {
    Scalar v6 = 0;
    for (const auto& f : faces_)
      for (size_t i = 1; i + 1 < f.size(); ++i)
        v6 += dot(verts_[static_cast<size_t>(f[0])],
                  cross(verts_[static_cast<size_t>(f[i])],
                        verts_[static_cast<size_t>(f[i + 1])]));
    return v6 / 6.0;
  }

  // Unordered pairs of distinct faces lying in parallel planes.  On a
  // strictly convex solid such faces have opposite outward normals.
  std::vector<std::pair<int, int>> parallel_face_pairs(Scalar eps = kEps) const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(faces_.size()); ++j)
        if (opposite_direction(face_normal(i), face_normal(j), eps))
          out.emplace_back(i, j);
    return out;
  }

  // Apply a point map (must be rigid or at least orientation- and
  // convexity-preserving) and re-validate.
  Polyhedron transformed(const std::function<Vec3(const Vec3&)>& map) const {
    std::vector<Vec3> vs;
    vs.reserve(verts_.size());
    for (const Vec3& v : verts_) vs.push_back(map(v));
    return build(std::move(vs), faces_, labels_);
  }

  Polyhedron translated(const Vec3& t) const {
    return transformed([&](const Vec3& v) { return v + t; });
  }

  Polyhedron scaled(Scalar s) const {
    return transformed([&](const Vec3& v) { return v * s; });
  }

private:
  void validate() {
    using K = BuildError::Kind;
    const size_t V = verts_.size(), F = faces_.size();
    if (V < 4 || F < 4)
      throw BuildError(K::Degenerate, "need at least 4 vertices and 4 faces");

    Vec3 lo = verts_[0], hi = verts_[0];
    for (const Vec3& v : verts_) {
      lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
      hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    diag_ = norm(hi - lo);
    if (diag_ < 1e-12)
      throw BuildError(K::Degenerate, "zero-extent vertex set");
    const Scalar tol = kMeshEps * diag_;

    for (size_t i = 0; i < V; ++i)
      for (size_t j = i + 1; j < V; ++j)
        if (distance(verts_[i], verts_[j]) < tol)
          throw BuildError(K::Degenerate,
                           "coincident vertices " + std::to_string(i) + " and " +
                               std::to_string(j));

    std::vector<bool> used(V, false);
    for (const auto& f : faces_) {
      if (f.size() < 3)
        throw BuildError(K::Degenerate, "face with fewer than 3 vertices");
      for (int v : f) {
        if (v < 0 || static_cast<size_t>(v) >= V)
          throw BuildError(K::Degenerate, "face vertex index out of range");
        used[static_cast<size_t>(v)] = true;
      }
      for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j)
          if (f[i] == f[j])
            throw BuildError(K::Degenerate, "face repeats a vertex");
    }
    for (size_t i = 0; i < V; ++i)
      if (!used[i])
        throw BuildError(K::Degenerate,
                         "vertex " + std::to_string(i) + " unused");

    // Edge table from directed-edge pairing.
    std::map<std::pair<int, int>, int> dir_owner;
    for (int fi = 0; fi < static_cast<int>(F); ++fi) {
      const auto& f = faces_[static_cast<size_t>(fi)];
      for (size_t i = 0; i < f.size(); ++i) {
        int u = f[i], v = f[(i + 1) % f.size()];
        if (!dir_owner.emplace(std::pair{u, v}, fi).second)
          throw BuildError(K::BadOrientation,
                           "directed edge traversed twice; inconsistent winding");
      }
    }
    edges_.clear();
    for (const auto& [e, fi] : dir_owner) {
      auto twin = dir_owner.find({e.second, e.first});
      if (twin == dir_owner.end())
        throw BuildError(K::OpenMesh, "edge (" + std::to_string(e.first) + "," +
                                          std::to_string(e.second) +
                                          ") not shared by two faces");
      if (e.first < e.second)
        edges_.push_back(Edge{e.first, e.second, fi, twin->second});
    }

    if (static_cast<long>(V) - static_cast<long>(edges_.size()) +
            static_cast<long>(F) != 2)
      throw BuildError(K::EulerViolation,
                       "V - E + F != 2 (V=" + std::to_string(V) + " E=" +
                           std::to_string(edges_.size()) + " F=" +
                           std::to_string(F) + ")");

    // Per-face plane (Newell), planarity and strict convexity.
    normals_.assign(F, Vec3{});
    offsets_.assign(F, 0);
    for (size_t fi = 0; fi < F; ++fi) {
      const auto& f = faces_[fi];
      Vec3 n{0, 0, 0};
      for (size_t i = 0; i < f.size(); ++i) {
        const Vec3& a = verts_[static_cast<size_t>(f[i])];
        const Vec3& b = verts_[static_cast<size_t>(f[(i + 1) % f.size()])];
        n += cross(a, b);
      }
      if (norm(n) < tol * diag_)
        throw BuildError(K::Degenerate,
                         "face " + std::to_string(fi) + " has near-zero area");
      n = normalized(n);
      Scalar off = 0;
      for (int v : f) off += dot(n, verts_[static_cast<size_t>(v)]);
      off /= static_cast<Scalar>(f.size());
      for (int v : f)
        if (std::abs(dot(n, verts_[static_cast<size_t>(v)]) - off) > tol)
          throw BuildError(K::NonPlanarFace,
                           "face " + std::to_string(fi) + " is not planar");
      for (size_t i = 0; i < f.size(); ++i) {
        const Vec3& p = verts_[static_cast<size_t>(f[i])];
        const Vec3& q = verts_[static_cast<size_t>(f[(i + 1) % f.size()])];
        const Vec3& r = verts_[static_cast<size_t>(f[(i + 2) % f.size()])];
        Vec3 turn = cross(q - p, r - q);
        if (norm(turn) < tol * diag_)
          throw BuildError(K::Degenerate,
                           "face " + std::to_string(fi) +
                               " has collinear consecutive vertices");
        if (dot(turn, n) < 0)
          throw BuildError(K::NonConvexFace,
                           "face " + std::to_string(fi) + " is not convex");
      }
      normals_[fi] = n;
      offsets_[fi] = off;
    }

    // Global convexity and outward orientation.
    for (size_t fi = 0; fi < F; ++fi) {
      size_t above = 0, below = 0;
      for (const Vec3& v : verts_) {
        Scalar d = dot(normals_[fi], v) - offsets_[fi];
        if (d > tol) ++above;
        else if (d < -tol) ++below;
      }
      if (above > 0 && below > 0)
        throw BuildError(K::NonConvexSolid,
                         "vertices on both sides of face " + std::to_string(fi));
      if (above > 0)
        throw BuildError(K::BadOrientation,
                         "face " + std::to_string(fi) +
                             " wound clockwise (normal points inward)");
    }
  }

  std::vector<Vec3> verts_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<Vec3> normals_;
  std::vector<Scalar> offsets_;
  Scalar diag_ = 0;
};

}  // namespace equiproj
