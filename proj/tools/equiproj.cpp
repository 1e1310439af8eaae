// Command-line surface for the equiproj library.
//
// Subcommands:
//   gen      write a named solid to an OFF/OBJ/VRML mesh file
//   verify   run the compensating-pair decision plus the sampled shadow
//            oracle on a file or named solid; exit 0 exactly on pass
//   shadow   silhouette corner count for one view direction, or a
//            degeneracy diagnosis listing the offending parallel faces
//   catalog  list the named solids and their expected silhouette counts
//   certify  print only the compensating-pair certificate or refutation
//
// Exit codes: 0 pass/success, 1 verification failed, 2 usage error,
// 3 unreadable or invalid input file, 4 geometric degeneracy.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equiproj/constructions.hpp"
#include "equiproj/io.hpp"

namespace {

using namespace equiproj;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDegenerate = 4;

// Bad solid names or parameter values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string dir_str(const Vec3& v) {
  std::ostringstream os;
  os << std::setprecision(6) << '(' << v.x << ", " << v.y << ", " << v.z
     << ')';
  return os.str();
}

// --param entries "key=value" -> (key, value) with syntax checking.
std::vector<std::pair<std::string, std::string>> parse_params(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& s : raw) {
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
      throw UsageError("--param expects key=value, got '" + s + "'");
    out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }
  return out;
}

int param_int(const std::pair<std::string, std::string>& kv) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(kv.second, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != kv.second.size())
    throw UsageError("parameter " + kv.first + " expects an integer, got '" +
                     kv.second + "'");
  return v;
}

// Resolves a solid name: catalog entries verbatim, plus the parametric
// families prism (k) and biprism (k1, k2).
Polyhedron build_named(const std::string& name,
                       const std::vector<std::string>& raw_params) {
  const auto params = parse_params(raw_params);
  auto get_int = [&](const std::string& key) -> std::optional<int> {
    for (const auto& kv : params)
      if (kv.first == key) return param_int(kv);
    return std::nullopt;
  };
  auto reject_unknown = [&](std::initializer_list<const char*> known) {
    for (const auto& kv : params) {
      bool ok = false;
      for (const char* k : known) ok = ok || kv.first == k;
      if (!ok)
        throw UsageError("unknown parameter '" + kv.first + "' for solid '" +
                         name + "'");
    }
  };

  if (name == "prism") {
    reject_unknown({"k"});
    const std::optional<int> k = get_int("k");
    if (!k) throw UsageError("prism requires --param k=<sides>");
    if (*k < 3) throw UsageError("prism needs at least 3 sides");
    return prism(*k);
  }
  if (name == "biprism") {
    reject_unknown({"k1", "k2"});
    const std::optional<int> k1 = get_int("k1"), k2 = get_int("k2");
    if (!k1 || !k2)
      throw UsageError("biprism requires --param k1=<n> --param k2=<n>");
    if (*k1 < 3 || *k2 < 3) throw UsageError("biprism needs k1, k2 >= 3");
    return biprism(*k1, *k2);
  }
  if (const CatalogEntry* e = find_catalog_entry(name)) {
    reject_unknown({});
    return e->build();
  }
  throw UsageError("unknown solid '" + name +
                   "'; run `equiproj catalog` for the list");
}

// Slurps and parses an OFF file; all failure modes surface as ParseError
// so the caller can map them to the io exit code.
Polyhedron load_polyhedron(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return read_off(buf.str());
  } catch (const BuildError& e) {
    throw ParseError(path + ": invalid mesh: " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int run_gen(const std::string& name, const std::vector<std::string>& params,
            const std::string& out_path, const std::string& format) {
  const Polyhedron p = build_named(name, params);
  MeshFormat f = MeshFormat::kOff;
  if (format == "obj") f = MeshFormat::kObj;
  if (format == "vrml") f = MeshFormat::kVrml;
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << write_mesh(p, f);
  if (!out) throw ParseError("write to '" + out_path + "' failed");
  std::cout << "wrote " << name << " to " << out_path << " (" << format
            << ", V=" << p.vertex_count() << " E=" << p.edge_count()
            << " F=" << p.face_count() << ")\n";
  return kExitPass;
}

void print_report_text(const VerifyReport& r) {
  std::cout << "name: " << r.name << '\n'
            << "duples: " << r.decision.duples.size() << '\n';
  if (r.decision.certificate) {
    std::cout << "decision: equiprojective ("
              << r.decision.certificate->pairs.size()
              << " compensating pairs)\n";
  } else {
    std::cout << "decision: not equiprojective ("
              << r.decision.refutation->reason << "; witness duples:";
    for (int i : r.decision.refutation->witness_duples) std::cout << ' ' << i;
    std::cout << ")\n";
  }
  if (r.shadow.constant) {
    std::cout << "shadow: k = " << r.shadow.k << " over " << r.shadow.samples
              << " directions\n";
  } else {
    std::cout << "shadow: non-constant: " << r.shadow.count_a
              << " corners toward " << dir_str(r.shadow.witness_a) << " vs "
              << r.shadow.count_b << " toward " << dir_str(r.shadow.witness_b)
              << '\n';
  }
  if (r.expected_k) std::cout << "expected k: " << *r.expected_k << '\n';
  std::cout << (r.pass ? "PASS" : "FAIL") << '\n';
}

int run_verify(const std::string& file, const std::string& gen_name,
               int samples, std::uint64_t seed, bool json) {
  if (file.empty() == gen_name.empty())
    throw UsageError("verify needs exactly one of FILE or --gen NAME");

  std::string name;
  std::optional<Polyhedron> p;
  std::optional<int> expected_k;
  if (!file.empty()) {
    name = file;
    p = load_polyhedron(file);
  } else {
    name = gen_name;
    p = build_named(gen_name, {});
    if (const CatalogEntry* e = find_catalog_entry(gen_name))
      expected_k = e->expected_k;
  }

  const VerifyReport r = make_verify_report(name, *p, expected_k, samples, seed);
  if (json)
    std::cout << report_to_json(r).dump(2) << '\n';
  else
    print_report_text(r);
  return r.pass ? kExitPass : kExitFail;
}

int run_shadow(const std::string& file, const std::string& dir_spec) {
  Vec3 d{};
  {
    std::istringstream in(dir_spec);
    char c1 = 0, c2 = 0;
    if (!(in >> d.x >> c1 >> d.y >> c2 >> d.z) || c1 != ',' || c2 != ',' ||
        !(in >> std::ws).eof())
      throw UsageError("--dir expects x,y,z (got '" + dir_spec + "')");
  }
  if (norm(d) < kEps) throw UsageError("--dir must be a nonzero vector");

  const Polyhedron p = load_polyhedron(file);
  if (is_degenerate_direction(p, d)) {
    const Vec3 u = normalized(d);
    std::cout << "degenerate direction: " << dir_str(u)
              << " is parallel to these face planes:\n";
    for (int f = 0; f < static_cast<int>(p.face_count()); ++f) {
      if (std::abs(dot(p.face_normal(f), u)) >= kDegenerateDirEps) continue;
      std::cout << "  face " << f;
      if (!p.face_label(f).empty()) std::cout << " [" << p.face_label(f) << ']';
      std::cout << " with normal " << dir_str(p.face_normal(f)) << '\n';
    }
    std::cout << "the shadow is not a polygon in general position; pick a "
                 "direction off every face plane\n";
    return kExitDegenerate;
  }
  std::cout << "silhouette: " << silhouette_count(p, d) << " corners toward "
            << dir_str(normalized(d)) << '\n';
  return kExitPass;
}

int run_catalog(bool json) {
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const CatalogEntry& e : catalog()) {
      nlohmann::json j;
      j["name"] = e.name;
      if (e.expected_k)
        j["expected_k"] = *e.expected_k;
      else
        j["expected_k"] = nullptr;
      out.push_back(j);
    }
    std::cout << out.dump(2) << '\n';
    return kExitPass;
  }
  std::size_t width = 0;
  for (const CatalogEntry& e : catalog()) width = std::max(width, e.name.size());
  for (const CatalogEntry& e : catalog()) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << e.name;
    if (e.expected_k)
      std::cout << "k = " << *e.expected_k << '\n';
    else
      std::cout << "not equiprojective\n";
  }
  return kExitPass;
}

int run_certify(const std::string& file, bool json) {
  const Polyhedron p = load_polyhedron(file);
  const Decision d = decide(p);
  if (json) {
    std::cout << decision_to_json(d).dump(2) << '\n';
  } else if (d.certificate) {
    std::cout << "equiprojective: " << d.duples.size() << " duples in "
              << d.certificate->pairs.size() << " compensating pairs\n";
  } else {
    std::cout << "not equiprojective: " << d.refutation->reason
              << "; witness duples:";
    for (int i : d.refutation->witness_duples) std::cout << ' ' << i;
    std::cout << '\n';
  }
  return d.certificate ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recognize, verify and construct equiprojective polyhedra"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a named solid to a mesh file");
  std::string gen_name, gen_out, gen_format = "off";
  std::vector<std::string> gen_params;
  gen->add_option("name", gen_name, "solid name (see `catalog`), or the "
                                    "parametric families prism / biprism")
      ->required();
  gen->add_option("--param", gen_params, "generator parameter key=value");
  gen->add_option("-o,--output", gen_out, "output file")->required();
  gen->add_option("--format", gen_format, "mesh format")
      ->check(CLI::IsMember({"off", "obj", "vrml"}));

  auto* verify = app.add_subcommand(
      "verify", "decide equiprojectivity and cross-check with the shadow "
                "oracle; exit 0 exactly on pass");
  std::string verify_file, verify_gen;
  int verify_samples = kShadowSamples;
  std::uint64_t verify_seed = kShadowSeed;
  bool verify_json = false;
  verify->add_option("file", verify_file, "OFF file to verify");
  verify->add_option("--gen", verify_gen, "verify a named solid instead");
  verify->add_option("--samples", verify_samples, "shadow sample count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "shadow sampling seed");
  verify->add_flag("--json", verify_json, "emit the JSON report");

  auto* shadow = app.add_subcommand(
      "shadow", "silhouette corner count for one view direction");
  std::string shadow_file, shadow_dir;
  shadow->add_option("file", shadow_file, "OFF file")->required();
  shadow->add_option("--dir", shadow_dir, "view direction x,y,z")->required();

  auto* cat = app.add_subcommand("catalog", "list named solids and expected k");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "emit JSON");

  auto* certify = app.add_subcommand(
      "certify", "print the compensating-pair certificate or refutation");
  std::string certify_file;
  bool certify_json = false;
  certify->add_option("file", certify_file, "OFF file")->required();
  certify->add_flag("--json", certify_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_name, gen_params, gen_out, gen_format);
    if (verify->parsed())
      return run_verify(verify_file, verify_gen, verify_samples, verify_seed,
                        verify_json);
    if (shadow->parsed()) return run_shadow(shadow_file, shadow_dir);
    if (cat->parsed()) return run_catalog(cat_json);
    if (certify->parsed()) return run_certify(certify_file, certify_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const GeomError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  }
  return kExitPass;
}
