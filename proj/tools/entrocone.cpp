// Command-line front end for entropy vectors, symmetrization, and the
// symmetrized holographic / quantum entropy cones.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "entrocone/cones.hpp"
#include "entrocone/fixtures.hpp"
#include "entrocone/graph.hpp"
#include "entrocone/io.hpp"
#include "entrocone/symmetrizer.hpp"
#include "entrocone/volumes.hpp"

namespace {

using namespace entrocone;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

/// Input or cap problem detected by the front end itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void check_cone_cap(int n, int cap) {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (n > cap) throw UsageError("--n " + std::to_string(n) + " exceeds cap " + std::to_string(cap) + " (raise --cap)");
}

GraphModel load_graph(const std::string& path) { return GraphModel::build(io::graph_spec_from_json(io::read_document(path))); }

SimplicialCone cone_named(const std::string& name, int n) { return name == "shec" ? shec_cone(n) : sqec_cone(n); }

struct Options {
  std::string graph_path;
  std::string subsystem;
  std::string backend = "flow";
  std::uint64_t enum_cap = kDefaultEnumerationCap;

  std::string vector_path;
  std::string inequality_path;

  std::string cone_name;
  int n = 0;
  int cap = 30;
  bool rays_only = false;
  bool facets_only = false;
  bool both = false;

  std::string rays_path;
  std::string cone_path;

  int max_n = 10;
  bool pretty = false;

  std::string weight;
  std::uint64_t copy_cap = kDefaultAverageCopyCap;

  int verify_n = 0;
  std::string emit_dir;
};

MinCutOptions cut_options(const Options& o) {
  MinCutOptions m;
  m.backend = o.backend == "enum" ? MinCutBackend::Enumerate : MinCutBackend::Flow;
  m.enumeration_cap = o.enum_cap;
  return m;
}

int run_entropy(const Options& o) {
  const GraphModel g = load_graph(o.graph_path);
  if (o.subsystem.empty()) {
    emit(io::to_json(entropy_vector(g, cut_options(o))));
    return kExitOk;
  }
  const Subsystem s = Subsystem::parse(g.parties(), o.subsystem);
  const Cut cut = min_cut(g, s, cut_options(o));
  Json j;
  j["parties"] = g.parties();
  j["subsystem"] = s.str();
  j["weight"] = cut.weight.str();
  Json side = Json::array();
  for (std::size_t v : cut.side) side.push_back(g.vertices()[v].id);
  j["side"] = std::move(side);
  Json edges = Json::array();
  for (std::size_t e : cut.cut_edges) {
    edges.push_back(Json::array({g.vertices()[g.edges()[e].u].id, g.vertices()[g.edges()[e].v].id}));
  }
  j["cut_edges"] = std::move(edges);
  emit(j);
  return kExitOk;
}

int run_symmetrize(const Options& o) {
  if (!o.vector_path.empty()) {
    const auto v = io::vector_from_json(io::read_document(o.vector_path));
    const auto* s = std::get_if<EntropyVector>(&v);
    if (!s) throw UsageError("symmetrize --vector needs an entropy vector, got a sym vector");
    emit(io::to_json(symmetrize_vector(*s)));
    return kExitOk;
  }
  const auto q = io::inequality_from_json(io::read_document(o.inequality_path));
  const auto* full = std::get_if<Inequality>(&q);
  if (!full) throw UsageError("symmetrize --inequality needs a full inequality, got a sym-inequality");
  emit(io::to_json(symmetrize_inequality(*full)));
  return kExitOk;
}

int run_cone(const Options& o) {
  check_cone_cap(o.n, o.cap);
  const SimplicialCone cone = cone_named(o.cone_name, o.n);
  const bool rays = o.rays_only || o.both || !o.facets_only;
  const bool facets = o.facets_only || o.both || !o.rays_only;
  emit(io::cone_to_json(o.n, rays ? &cone.rays : nullptr, facets ? &cone.facets : nullptr));
  return kExitOk;
}

int run_dual(const Options& o) {
  const auto doc = io::cone_from_json(io::read_document(o.rays_path));
  if (!doc.rays) throw UsageError("dual needs a document with \"rays\"");
  const SimplicialCone cone = cone_from_rays(doc.parties, *doc.rays);
  emit(io::cone_to_json(cone.parties, &cone.rays, &cone.facets));
  return kExitOk;
}

int run_member(const Options& o) {
  const auto doc = io::cone_from_json(io::read_document(o.cone_path));
  SimplicialCone cone;
  if (doc.rays) {
    cone = cone_from_rays(doc.parties, *doc.rays);
    if (doc.facets) cone.facets = *doc.facets;
  } else if (doc.facets) {
    cone = {doc.parties, primitive_columns(invert(*doc.facets)), *doc.facets};
  } else {
    throw UsageError("cone document has neither rays nor facets");
  }
  const auto any = io::vector_from_json(io::read_document(o.vector_path));
  const SymVector v = std::holds_alternative<SymVector>(any) ? std::get<SymVector>(any)
                                                             : symmetrize_vector(std::get<EntropyVector>(any));
  const auto result = membership(cone, v);
  Json j;
  if (const auto* m = std::get_if<Member>(&result)) {
    j["member"] = true;
    Json c = Json::array();
    for (const auto& x : m->coefficients) c.push_back(x.str());
    j["coefficients"] = std::move(c);
    emit(j);
    return kExitOk;
  }
  const auto& out = std::get<Outside>(result);
  j["member"] = false;
  j["violated_facet"] = out.facet + 1;
  Json row = Json::array();
  for (const auto& x : out.facet_row) row.push_back(x.str());
  j["facet"] = std::move(row);
  j["value"] = out.value.str();
  emit(j);
  return kExitVerification;
}

int run_volume(const Options& o) {
  check_cone_cap(o.n, o.cap);
  const RMatrix rays = o.cone_name == "shec" ? shec_rays(o.n) : sqec_rays(o.n);
  emit(io::volume_to_json(o.n, o.cone_name, cone_volume(rays)));
  return kExitOk;
}

int run_table(const Options& o) {
  check_cone_cap(o.max_n, o.cap);
  const auto rows = ratio_table(o.max_n);
  if (!o.pretty) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(io::to_json(r));
    emit(a);
    return kExitOk;
  }
  std::size_t w_shec = 10, w_sqec = 10;
  for (const auto& r : rows) {
    w_shec = std::max(w_shec, r.inv_shec.str().size());
    w_sqec = std::max(w_sqec, r.inv_sqec.str().size());
  }
  std::cout << std::setw(4) << "n" << "  " << std::setw(static_cast<int>(w_shec)) << "1/vol SHEC" << "  "
            << std::setw(static_cast<int>(w_sqec)) << "1/vol SQEC" << "  " << "SHEC/SQEC" << '\n';
  for (const auto& r : rows) {
    std::cout << std::setw(4) << r.parties << "  " << std::setw(static_cast<int>(w_shec)) << r.inv_shec.str() << "  "
              << std::setw(static_cast<int>(w_sqec)) << r.inv_sqec.str() << "  " << r.ratio_3sf << '\n';
  }
  return kExitOk;
}

int run_cross_section(const Options& o) {
  check_cone_cap(o.n, o.cap);
  emit(io::cross_section_to_json(cross_section(cone_named(o.cone_name, o.n))));
  return kExitOk;
}

int run_star(const Options& o) {
  if (o.n < 1 || o.n > kMaxParties) throw UsageError("--n outside 1.." + std::to_string(kMaxParties));
  emit(io::to_json(star_graph(o.n, Rational::parse(o.weight))));
  return kExitOk;
}

int run_average(const Options& o) {
  emit(io::to_json(average_graph(load_graph(o.graph_path), o.copy_cap)));
  return kExitOk;
}

void emit_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const Json& j) {
    std::ofstream out(fs::path(dir) / name);
    if (!out) throw UsageError("cannot write " + (fs::path(dir) / name).string());
    out << j.dump(2) << '\n';
  };
  for (const auto& r : holographic_rays()) {
    write("hec-ray-n" + std::to_string(r.parties) + "-" + std::to_string(r.row) + ".json", io::to_json(r.vector));
  }
  for (const auto& f : holographic_facets()) {
    write("hec-facet-n" + std::to_string(f.parties) + "-" + std::to_string(f.row) + ".json", io::to_json(f.inequality));
  }
  for (const auto& f : quantum_facets()) {
    write("sassa-facet-n" + std::to_string(f.parties) + "-" + std::to_string(f.row) + ".json",
          io::to_json(f.inequality));
  }
}

int run_verify(const Options& o) {
  if (!o.emit_dir.empty()) emit_fixtures(o.emit_dir);
  if (o.verify_n != 0 && (o.verify_n < 2 || o.verify_n > 5)) throw UsageError("--n must be in 2..5");
  int failures = 0, total = 0;
  for (int n = 2; n <= 5; ++n) {
    if (o.verify_n != 0 && n != o.verify_n) continue;
    for (const auto& line : verify_appendix(n)) {
      ++total;
      if (!line.passed) ++failures;
      std::cout << (line.passed ? "PASS" : "FAIL") << "  " << line.table << "  n=" << line.parties << "  #"
                << line.row << "  " << line.detail << '\n';
    }
  }
  std::cout << (total - failures) << "/" << total << " fixture rows passed\n";
  return failures == 0 ? kExitOk : kExitVerification;
}

int run_check(const Options& o) {
  const auto q = io::inequality_from_json(io::read_document(o.inequality_path));
  EntropyVector s(1);
  std::optional<SymVector> sym;
  if (!o.graph_path.empty()) {
    s = entropy_vector(load_graph(o.graph_path), cut_options(o));
  } else {
    const auto v = io::vector_from_json(io::read_document(o.vector_path));
    if (const auto* e = std::get_if<EntropyVector>(&v)) {
      s = *e;
    } else {
      sym = std::get<SymVector>(v);
    }
  }
  Rational value;
  if (const auto* full = std::get_if<Inequality>(&q)) {
    if (sym) throw UsageError("a full inequality needs an entropy vector or a graph");
    value = evaluate(*full, s);
  } else {
    value = evaluate(std::get<SymInequality>(q), sym ? *sym : symmetrize_vector(s));
  }
  Json j;
  j["value"] = value.str();
  j["satisfied"] = value.sign() >= 0;
  emit(j);
  return value.sign() >= 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact entropy vectors, symmetrizations, and symmetrized entropy cones"};
  app.require_subcommand(1);
  Options o;

  auto* entropy = app.add_subcommand("entropy", "Min-cut entropy vector of a graph model");
  entropy->add_option("graph", o.graph_path, "Graph JSON file, - for stdin")->required();
  entropy->add_option("--subsystem", o.subsystem, "Single subsystem, e.g. 1,2");
  entropy->add_option("--backend", o.backend, "flow or enum")->check(CLI::IsMember({"flow", "enum"}));
  entropy->add_option("--cap", o.enum_cap, "Enumeration cap (candidate sets)");

  auto* symmetrize = app.add_subcommand("symmetrize", "Symmetrize a vector or an inequality");
  auto* sv = symmetrize->add_option("--vector", o.vector_path, "Entropy vector file");
  auto* si = symmetrize->add_option("--inequality", o.inequality_path, "Inequality file");
  sv->excludes(si);
  symmetrize->require_option(1);

  auto* cone = app.add_subcommand("cone", "Rays and facets of SHEC_n or SQEC_n");
  cone->add_option("which", o.cone_name, "shec or sqec")->required()->check(CLI::IsMember({"shec", "sqec"}));
  cone->add_option("--n", o.n, "Party count")->required();
  auto* cr = cone->add_flag("--rays", o.rays_only, "Rays only");
  auto* cf = cone->add_flag("--facets", o.facets_only, "Facets only");
  auto* cb = cone->add_flag("--both", o.both, "Rays and facets (default)");
  cr->excludes(cf)->excludes(cb);
  cf->excludes(cb);
  cone->add_option("--cap", o.cap, "Largest admissible n");

  auto* dual = app.add_subcommand("dual", "Facets of the simplicial cone spanned by given rays");
  dual->add_option("--rays", o.rays_path, "Cone file with rays")->required();

  auto* member = app.add_subcommand("member", "Decompose a vector over a cone's rays");
  member->add_option("--cone", o.cone_path, "Cone file")->required();
  member->add_option("--vector", o.vector_path, "Vector file (entropy vectors are symmetrized)")->required();

  auto* volume = app.add_subcommand("volume", "Exact cross-section volume of SHEC_n or SQEC_n");
  volume->add_option("which", o.cone_name, "shec or sqec")->required()->check(CLI::IsMember({"shec", "sqec"}));
  volume->add_option("--n", o.n, "Party count")->required();
  volume->add_option("--cap", o.cap, "Largest admissible n");

  auto* table = app.add_subcommand("table", "Exact volume table for n = 2..max");
  table->add_option("--max-n", o.max_n, "Largest n")->required();
  table->add_flag("--pretty", o.pretty, "Aligned text instead of JSON");
  table->add_option("--cap", o.cap, "Largest admissible n");

  auto* cross = app.add_subcommand("cross-section", "Ray vertices on the slice sum_k S_k = 1");
  cross->add_option("which", o.cone_name, "shec or sqec")->required()->check(CLI::IsMember({"shec", "sqec"}));
  cross->add_option("--n", o.n, "Party count")->required();
  cross->add_option("--cap", o.cap, "Largest admissible n");

  auto* star = app.add_subcommand("star", "Star graph with purifier weight w");
  star->add_option("--n", o.n, "Party count")->required();
  star->add_option("--w", o.weight, "Purifier edge weight p/q")->required();

  auto* average = app.add_subcommand("average", "Permutation-averaged graph");
  average->add_option("graph", o.graph_path, "Graph JSON file, - for stdin")->required();
  average->add_option("--cap", o.copy_cap, "Largest number of recolored copies");

  auto* verify = app.add_subcommand("verify", "Check the built-in fixture tables");
  verify->add_option("--n", o.verify_n, "Only this party count (2..5)");
  verify->add_option("--emit-fixtures", o.emit_dir, "Also write fixtures as vector/inequality files here");

  auto* check = app.add_subcommand("check", "Evaluate an inequality on a graph or a vector");
  check->add_option("--inequality", o.inequality_path, "Inequality file")->required();
  auto* cg = check->add_option("--graph", o.graph_path, "Graph file");
  auto* cv = check->add_option("--vector", o.vector_path, "Vector file");
  cg->excludes(cv);
  check->add_option("--backend", o.backend, "flow or enum")->check(CLI::IsMember({"flow", "enum"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*entropy) return run_entropy(o);
    if (*symmetrize) return run_symmetrize(o);
    if (*cone) return run_cone(o);
    if (*dual) return run_dual(o);
    if (*member) return run_member(o);
    if (*volume) return run_volume(o);
    if (*table) return run_table(o);
    if (*cross) return run_cross_section(o);
    if (*star) return run_star(o);
    if (*average) return run_average(o);
    if (*verify) return run_verify(o);
    if (*check) {
      if (o.graph_path.empty() && o.vector_path.empty()) throw UsageError("check needs --graph or --vector");
      return run_check(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
