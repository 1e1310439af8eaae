#pragma once

// Core numeric types for the equiproj library: 3D vectors over double
// precision, the global tolerance policy and the error hierarchy.
//
// All geometric predicates in the library funnel through the small set of
// helpers defined here so that the tolerance policy lives in exactly one
// place.  Comparisons are made on normalized quantities (unit vectors,
// scale-relative distances); the default tolerance is 1e-9.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace equiproj {

using Scalar = double;

inline constexpr Scalar kPi = 3.14159265358979323846;

// Default tolerance for comparisons of normalized quantities.
inline constexpr Scalar kEps = 1e-9;

// Angular threshold below which a direction counts as parallel to a face
// plane (used by the shadow module to reject degenerate view directions).
inline constexpr Scalar kDegenerateDirEps = 1e-7;

// ---------------------------------------------------------------------------
// Errors

// Root of the library's error hierarchy.
class GeomError : public std::runtime_error {
public:
  explicit GeomError(const std::string& what) : std::runtime_error(what) {}
};

// A mesh failed structural or convexity validation.  `kind` distinguishes
// the specific invariant that was violated.
class BuildError : public GeomError {
public:
  enum class Kind {
    OpenMesh,           // some edge not shared by exactly two faces
    BadOrientation,     // inconsistent winding or inward-facing normals
    NonPlanarFace,      // face vertices not coplanar within tolerance
    NonConvexFace,      // face polygon not strictly convex
    NonConvexSolid,     // some vertex strictly outside a face plane
    EulerViolation,     // V - E + F != 2
    Degenerate,         // too few vertices/faces, zero-length edge, ...
  };
  BuildError(Kind kind, const std::string& what) : GeomError(what), kind(kind) {}
  Kind kind;
};

// cut() was asked to do something geometrically degenerate (plane through a
// vertex or tangent to the solid).
class DegenerateCutError : public GeomError {
public:
  using GeomError::GeomError;
};

// glue() preconditions failed (non-congruent faces, reflex seam, ...).
class GlueError : public GeomError {
public:
  using GeomError::GeomError;
};

// A view direction too close to some face plane was passed to the shadow
// module.
class DegenerateDirectionError : public GeomError {
public:
  using GeomError::GeomError;
};

// File parsing / serialization failure.
class ParseError : public GeomError {
public:
  using GeomError::GeomError;
};

// ---------------------------------------------------------------------------
// Vec3

struct Vec3 {
  Scalar x = 0, y = 0, z = 0;

  Vec3() = default;
  Vec3(Scalar x, Scalar y, Scalar z) : x(x), y(y), z(z) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(Scalar s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(Scalar s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(Scalar s) { x *= s; y *= s; z *= s; return *this; }

  friend Vec3 operator*(Scalar s, const Vec3& v) { return v * s; }
};

inline Scalar dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Scalar norm2(const Vec3& v) { return dot(v, v); }
inline Scalar norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline Vec3 normalized(const Vec3& v) {
  Scalar n = norm(v);
  if (n < kEps)
    throw GeomError("cannot normalize near-zero vector");
  return v / n;
}

inline Scalar distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// True if a and b span (numerically) the same line, irrespective of
// orientation.  Inputs need not be unit length; the test is performed on the
// normalized vectors so the tolerance is scale-free.
inline bool parallel(const Vec3& a, const Vec3& b, Scalar eps = kEps) {
  Scalar na = norm(a), nb = norm(b);
  if (na < eps || nb < eps) return false;
  return norm(cross(a / na, b / nb)) < eps;
}

// True if a and b are parallel and point in opposite directions.
inline bool opposite_direction(const Vec3& a, const Vec3& b, Scalar eps = kEps) {
  return parallel(a, b, eps) && dot(a, b) < 0;
}

// True if a and b are parallel and point in the same direction.
inline bool same_direction(const Vec3& a, const Vec3& b, Scalar eps = kEps) {
  return parallel(a, b, eps) && dot(a, b) > 0;
}

inline bool approx_equal(const Vec3& a, const Vec3& b, Scalar eps = kEps) {
  return distance(a, b) < eps;
}

// ---------------------------------------------------------------------------
// Plane: points x with dot(normal, x) <= offset inside (closed half-space).

struct Plane {
  Vec3 normal;    // unit length
  Scalar offset;  // signed distance of the plane from the origin

  Plane() = default;
  Plane(const Vec3& n, Scalar off) : normal(normalized(n)), offset(off) {
    offset = off / norm(n);  // keep offset consistent with unit normal
  }

  static Plane through_point(const Vec3& n, const Vec3& p) {
    Vec3 u = normalized(n);
    return Plane(u, dot(u, p));
  }

  Scalar signed_distance(const Vec3& p) const { return dot(normal, p) - offset; }
};

// ---------------------------------------------------------------------------
// Deterministic RNG: splitmix64.  Used wherever the library needs seeded
// randomness (direction sampling, randomized tests) so results are
// reproducible across platforms.

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

// Uniformly distributed unit vector, via rejection sampling in the unit
// ball.  Deterministic given the generator state.
inline Vec3 random_unit_vector(SplitMix64& rng) {
  for (;;) {
    Vec3 v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Scalar n2 = norm2(v);
    if (n2 > 1e-4 && n2 <= 1.0) return v / std::sqrt(n2);
  }
}

}  // namespace equiproj
