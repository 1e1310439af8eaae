#pragma once

// Mesh serialization and machine-readable verification reports.
//
// OFF is the canonical interchange format (read + write): the simplest
// text format carrying arbitrary polygon face loops.  OBJ and VRML 2.0 are
// write-only export formats for external viewers.  Coordinates print with
// 17 significant digits, enough for a binary64 value to survive a
// write/read round trip bit-for-bit, so read_off(write_off(p)) reproduces
// p exactly.
//
// read_off accepts the classic layout: an "OFF" header line, a "V F E"
// count line (the E entry is advisory and recomputed), V vertex lines and
// F face lines.  '#' starts a comment; blank lines are skipped; tokens on
// a face line beyond the announced index count (per-face colors) are
// ignored.  A mesh whose faces are consistently wound but all clockwise is
// repaired by reversing every loop; any other defect propagates as the
// build error it raises.
//
// VerifyReport bundles the combinatorial decision and the sampled shadow
// verdict for one solid; its JSON rendering is the report schema spoken by
// the command-line tool.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "equiproj/compensation.hpp"
#include "equiproj/core.hpp"
#include "equiproj/polyhedron.hpp"
#include "equiproj/shadow.hpp"

namespace equiproj {

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

namespace detail {

// Shortest decimal form that recovers the exact binary64 value on parse.
inline std::string format_scalar(Scalar v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

}  // namespace detail

inline std::string write_off(const Polyhedron& p) {
  std::ostringstream os;
  os << "OFF\n"
     << p.vertex_count() << ' ' << p.face_count() << ' ' << p.edge_count()
     << '\n';
  for (const Vec3& v : p.vertices())
    os << detail::format_scalar(v.x) << ' ' << detail::format_scalar(v.y)
       << ' ' << detail::format_scalar(v.z) << '\n';
  for (const auto& f : p.faces()) {
    os << f.size();
    for (int v : f) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

inline std::string write_obj(const Polyhedron& p) {
  std::ostringstream os;
  for (const Vec3& v : p.vertices())
    os << "v " << detail::format_scalar(v.x) << ' '
       << detail::format_scalar(v.y) << ' ' << detail::format_scalar(v.z)
       << '\n';
  for (const auto& f : p.faces()) {
    os << 'f';
    for (int v : f) os << ' ' << v + 1;  // OBJ indices are 1-based
    os << '\n';
  }
  return os.str();
}

inline std::string write_vrml(const Polyhedron& p) {
  std::ostringstream os;
  os << "#VRML V2.0 utf8\n"
     << "Shape {\n"
     << "  appearance Appearance {\n"
     << "    material Material { diffuseColor 0.65 0.70 0.90 }\n"
     << "  }\n"
     << "  geometry IndexedFaceSet {\n"
     << "    coord Coordinate {\n"
     << "      point [\n";
  for (const Vec3& v : p.vertices())
    os << "        " << detail::format_scalar(v.x) << ' '
       << detail::format_scalar(v.y) << ' ' << detail::format_scalar(v.z)
       << ",\n";
  os << "      ]\n"
     << "    }\n"
     << "    coordIndex [\n";
  for (const auto& f : p.faces()) {
    os << "      ";
    for (int v : f) os << v << ", ";
    os << "-1,\n";
  }
  os << "    ]\n"
     << "    solid TRUE\n"
     << "    convex TRUE\n"
     << "  }\n"
     << "}\n";
  return os.str();
}

enum class MeshFormat { kOff, kObj, kVrml };

inline std::string write_mesh(const Polyhedron& p, MeshFormat format) {
  switch (format) {
    case MeshFormat::kOff: return write_off(p);
    case MeshFormat::kObj: return write_obj(p);
    case MeshFormat::kVrml: return write_vrml(p);
  }
  throw GeomError("write_mesh: unknown format");
}

// ---------------------------------------------------------------------------
// OFF reader
// ---------------------------------------------------------------------------

namespace detail {

struct OffLine {
  int number = 0;  // 1-based line number in the source text
  std::vector<std::string> tokens;
};

// Comment-stripped, whitespace-tokenized non-empty lines.
inline std::vector<OffLine> tokenize_off(const std::string& text) {
  std::vector<OffLine> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    OffLine l;
    l.number = number;
    std::string tok;
    while (ls >> tok) l.tokens.push_back(std::move(tok));
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

inline ParseError off_error(int line, const std::string& what) {
  return ParseError("OFF parse error, line " + std::to_string(line) + ": " +
                    what);
}

inline long off_int(const OffLine& l, std::size_t idx, const char* what) {
  const std::string& s = l.tokens[idx];
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size())
    throw off_error(l.number,
                    std::string("expected ") + what + ", got '" + s + "'");
  return v;
}

inline Scalar off_scalar(const OffLine& l, std::size_t idx, const char* what) {
  const std::string& s = l.tokens[idx];
  std::size_t pos = 0;
  Scalar v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size())
    throw off_error(l.number,
                    std::string("expected ") + what + ", got '" + s + "'");
  return v;
}

}  // namespace detail

inline Polyhedron read_off(const std::string& text) {
  const std::vector<detail::OffLine> lines = detail::tokenize_off(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const detail::OffLine& {
    if (at >= lines.size()) {
      const int last = lines.empty() ? 0 : lines.back().number;
      throw detail::off_error(last, std::string("unexpected end of input, "
                                                "expected ") +
                                        what);
    }
    return lines[at++];
  };

  const detail::OffLine& header = need("OFF header");
  if (header.tokens.size() != 1 || header.tokens[0] != "OFF")
    throw detail::off_error(header.number, "expected bare 'OFF' header line");

  const detail::OffLine& counts = need("counts line 'V F E'");
  if (counts.tokens.size() != 3)
    throw detail::off_error(counts.number, "counts line must hold 'V F E'");
  const long v_count = detail::off_int(counts, 0, "vertex count");
  const long f_count = detail::off_int(counts, 1, "face count");
  detail::off_int(counts, 2, "edge count");  // advisory; recomputed by build
  if (v_count < 1 || f_count < 1)
    throw detail::off_error(counts.number, "vertex and face counts must be "
                                           "positive");

  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(v_count));
  for (long i = 0; i < v_count; ++i) {
    const detail::OffLine& l = need("vertex line");
    if (l.tokens.size() < 3)
      throw detail::off_error(l.number, "vertex line needs 3 coordinates");
    verts.push_back({detail::off_scalar(l, 0, "x coordinate"),
                     detail::off_scalar(l, 1, "y coordinate"),
                     detail::off_scalar(l, 2, "z coordinate")});
  }

  std::vector<std::vector<int>> faces;
  faces.reserve(static_cast<std::size_t>(f_count));
  for (long i = 0; i < f_count; ++i) {
    const detail::OffLine& l = need("face line");
    const long n = detail::off_int(l, 0, "face vertex count");
    if (n < 3)
      throw detail::off_error(l.number, "face needs at least 3 vertices");
    if (l.tokens.size() < static_cast<std::size_t>(n) + 1)
      throw detail::off_error(l.number,
                              "face line announces " + std::to_string(n) +
                                  " indices but holds fewer");
    std::vector<int> f;
    f.reserve(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j) {
      const long idx =
          detail::off_int(l, static_cast<std::size_t>(j), "vertex index");
      if (idx < 0 || idx >= v_count)
        throw detail::off_error(l.number, "vertex index " +
                                              std::to_string(idx) +
                                              " out of range");
      f.push_back(static_cast<int>(idx));
    }
    faces.push_back(std::move(f));
    // Tokens past the announced indices (face colors) are ignored.
  }

  if (at != lines.size())
    throw detail::off_error(lines[at].number, "unexpected trailing content");

  try {
    return Polyhedron::build(verts, faces);
  } catch (const BuildError& e) {
    if (e.kind != BuildError::Kind::BadOrientation) throw;
    // Consistent but inward winding: repair by reversing every loop.
    for (auto& f : faces) std::reverse(f.begin(), f.end());
    return Polyhedron::build(std::move(verts), std::move(faces));
  }
}

// ---------------------------------------------------------------------------
// Verification report
// ---------------------------------------------------------------------------

struct VerifyReport {
  std::string name;  // solid name or source file
  Decision decision;
  ShadowReport shadow;
  std::optional<int> expected_k;
  // pass holds exactly when the decision certifies, the sampled shadow
  // count is constant, and it matches expected_k whenever one is known.
  bool pass = false;
};

inline VerifyReport make_verify_report(std::string name, const Polyhedron& p,
                                       std::optional<int> expected_k = {},
                                       int samples = kShadowSamples,
                                       std::uint64_t seed = kShadowSeed) {
  VerifyReport r;
  r.name = std::move(name);
  r.decision = decide(p);
  r.shadow = measure_k(p, samples, seed);
  r.expected_k = expected_k;
  r.pass = r.decision.equiprojective && r.shadow.constant &&
           (!r.expected_k || r.shadow.k == *r.expected_k);
  return r;
}

inline nlohmann::json shadow_to_json(const ShadowReport& s) {
  nlohmann::json j;
  j["samples"] = s.samples;
  if (s.constant) {
    j["k"] = s.k;
  } else {
    j["witness"] = {
        {"dir_a", {s.witness_a.x, s.witness_a.y, s.witness_a.z}},
        {"count_a", s.count_a},
        {"dir_b", {s.witness_b.x, s.witness_b.y, s.witness_b.z}},
        {"count_b", s.count_b},
    };
  }
  return j;
}

// Serializes the decision alone: duple count plus either the certificate
// pairing or the refutation witness.
inline nlohmann::json decision_to_json(const Decision& d) {
  nlohmann::json j;
  j["duples"] = d.duples.size();
  if (d.certificate) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : d.certificate->pairs)
      pairs.push_back(nlohmann::json::array({a, b}));
    j["certificate"] = {{"pairs", pairs}};
  }
  if (d.refutation) {
    j["refutation"] = {{"reason", d.refutation->reason},
                       {"witness_duples", d.refutation->witness_duples}};
  }
  return j;
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json j = decision_to_json(r.decision);
  j["name"] = r.name;
  j["shadow"] = shadow_to_json(r.shadow);
  if (r.expected_k)
    j["expected_k"] = *r.expected_k;
  else
    j["expected_k"] = nullptr;
  j["pass"] = r.pass;
  return j;
}

}  // namespace equiproj
