#include "entrocone/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <set>

namespace entrocone::io {

namespace {

void require_object(const Json& j, const char* what, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) throw FormatError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

const Json& field(const Json& j, const char* what, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* what, const char* key) {
  const Json& v = field(j, what, key);
  if (!v.is_number_integer()) throw FormatError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

int parties_field(const Json& j, const char* what) {
  const int n = int_field(j, what, "parties");
  if (n < 1 || n > kMaxParties) throw FormatError(std::string(what) + ": parties outside 1.." + std::to_string(kMaxParties));
  return n;
}

std::string kind_field(const Json& j, const char* what) {
  const Json& v = field(j, what, "kind");
  if (!v.is_string()) throw FormatError(std::string(what) + ": \"kind\" must be a string");
  return v.get<std::string>();
}

std::vector<Rational> rationals(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json rationals_to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

RMatrix matrix_from_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(rationals(r, what));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw FormatError(std::string(what) + ": rows of unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Json matrix_rows_to_json(const RMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(rationals_to_json(m.row(r)));
  return a;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational string such as \"-5/4\", got " + j.dump());
}

Json to_json(const Rational& r) { return r.str(); }

GraphSpec graph_spec_from_json(const Json& j) {
  constexpr const char* what = "graph";
  require_object(j, what, {"parties", "vertices", "edges"});
  GraphSpec s;
  s.parties = parties_field(j, what);
  const Json& vertices = field(j, what, "vertices");
  if (!vertices.is_array()) throw FormatError("graph: \"vertices\" must be an array");
  for (const auto& v : vertices) {
    require_object(v, "graph vertex", {"id", "color"});
    const Json& id = field(v, "graph vertex", "id");
    if (!id.is_string()) throw FormatError("graph vertex: \"id\" must be a string");
    GraphSpec::Vertex vert{id.get<std::string>(), std::nullopt};
    if (v.contains("color")) vert.color = int_field(v, "graph vertex", "color");
    s.vertices.push_back(std::move(vert));
  }
  const Json& edges = field(j, what, "edges");
  if (!edges.is_array()) throw FormatError("graph: \"edges\" must be an array");
  for (const auto& e : edges) {
    require_object(e, "graph edge", {"u", "v", "w"});
    const Json& u = field(e, "graph edge", "u");
    const Json& v = field(e, "graph edge", "v");
    if (!u.is_string() || !v.is_string()) throw FormatError("graph edge: endpoints must be vertex id strings");
    s.edges.push_back({u.get<std::string>(), v.get<std::string>(), rational_from_json(field(e, "graph edge", "w"))});
  }
  return s;
}

Json to_json(const GraphModel& g) {
  Json j;
  j["parties"] = g.parties();
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    Json jv;
    jv["id"] = v.id;
    if (v.color) jv["color"] = *v.color;
    vertices.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je;
    je["u"] = g.vertices()[e.u].id;
    je["v"] = g.vertices()[e.v].id;
    je["w"] = e.weight.str();
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

AnyVector vector_from_json(const Json& j) {
  constexpr const char* what = "vector";
  require_object(j, what, {"parties", "kind", "entries"});
  const int n = parties_field(j, what);
  const std::string kind = kind_field(j, what);
  auto entries = rationals(field(j, what, "entries"), "vector entries");
  try {
    if (kind == "entropy") return EntropyVector(n, std::move(entries));
    if (kind == "sym") return SymVector(n, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("vector: ") + e.what());
  }
  throw FormatError("vector: kind must be \"entropy\" or \"sym\", got \"" + kind + "\"");
}

Json to_json(const EntropyVector& v) {
  Json j;
  j["parties"] = v.parties();
  j["kind"] = "entropy";
  j["entries"] = rationals_to_json(v.span());
  return j;
}

Json to_json(const SymVector& v) {
  Json j;
  j["parties"] = v.parties();
  j["kind"] = "sym";
  j["entries"] = rationals_to_json(v.span());
  return j;
}

AnyInequality inequality_from_json(const Json& j) {
  constexpr const char* what = "inequality";
  require_object(j, what, {"parties", "kind", "coeffs"});
  const int n = parties_field(j, what);
  const std::string kind = kind_field(j, what);
  const Json& coeffs = field(j, what, "coeffs");
  if (!coeffs.is_object()) throw FormatError("inequality: \"coeffs\" must be an object");
  if (kind == "inequality") {
    Inequality q(n);
    for (const auto& [key, value] : coeffs.items()) {
      std::size_t idx;
      try {
        const Subsystem s = Subsystem::parse(n, key);
        if (!s.is_canonical()) throw std::invalid_argument("contains the purifier");
        idx = coordinate_index(s);
      } catch (const std::exception& e) {
        throw FormatError("inequality: bad subsystem key \"" + key + "\": " + e.what());
      }
      q[idx] = rational_from_json(value);
    }
    return q;
  }
  if (kind == "sym-inequality") {
    SymInequality q(n);
    for (const auto& [key, value] : coeffs.items()) {
      const bool digits = !key.empty() && key.size() < 4 &&
                          std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; });
      const int k = digits ? std::stoi(key) : 0;
      if (k < 1 || k > static_cast<int>(q.size())) {
        throw FormatError("sym-inequality: key \"" + key + "\" is not a cardinality in 1.." + std::to_string(q.size()));
      }
      q[k - 1] = rational_from_json(value);
    }
    return q;
  }
  throw FormatError("inequality: kind must be \"inequality\" or \"sym-inequality\", got \"" + kind + "\"");
}

Json to_json(const Inequality& q) {
  Json j;
  j["parties"] = q.parties();
  j["kind"] = "inequality";
  Json coeffs = Json::object();
  const auto order = subsystem_order(q.parties());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!q[i].is_zero()) coeffs[order[i].str()] = q[i].str();
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const SymInequality& q) {
  Json j;
  j["parties"] = q.parties();
  j["kind"] = "sym-inequality";
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!q[k].is_zero()) coeffs[std::to_string(k + 1)] = q[k].str();
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

ConeDocument cone_from_json(const Json& j) {
  constexpr const char* what = "cone";
  require_object(j, what, {"parties", "rays", "facets"});
  ConeDocument doc;
  doc.parties = parties_field(j, what);
  const auto d = static_cast<std::size_t>(sym_dimension(doc.parties));
  if (j.contains("rays")) {
    RMatrix rows = matrix_from_rows(j.at("rays"), "cone rays");
    if (rows.rows() != d || rows.cols() != d) {
      throw FormatError("cone: expected " + std::to_string(d) + " rays of length " + std::to_string(d));
    }
    doc.rays = rows.transpose();
  }
  if (j.contains("facets")) {
    RMatrix rows = matrix_from_rows(j.at("facets"), "cone facets");
    if (rows.rows() != d || rows.cols() != d) {
      throw FormatError("cone: expected " + std::to_string(d) + " facets of length " + std::to_string(d));
    }
    doc.facets = std::move(rows);
  }
  return doc;
}

Json cone_to_json(int parties, const RMatrix* rays, const RMatrix* facets) {
  Json j;
  j["parties"] = parties;
  if (rays) j["rays"] = matrix_rows_to_json(rays->transpose());
  if (facets) j["facets"] = matrix_rows_to_json(*facets);
  return j;
}

Json cross_section_to_json(const std::vector<std::vector<Rational>>& vertices) {
  Json a = Json::array();
  for (const auto& v : vertices) a.push_back(rationals_to_json(v));
  Json j;
  j["vertices"] = std::move(a);
  return j;
}

Json to_json(const RatioRow& row) {
  Json j;
  j["n"] = row.parties;
  j["inv_shec"] = row.inv_shec.str();
  j["inv_sqec"] = row.inv_sqec.str();
  j["ratio"] = row.ratio.str();
  j["ratio_3sf"] = row.ratio_3sf;
  return j;
}

Json volume_to_json(int parties, const std::string& cone, const VolumeReport& report) {
  Json j;
  j["n"] = parties;
  j["cone"] = cone;
  j["determinant"] = report.determinant.str();
  j["norm_product"] = report.norm_product.str();
  j["volume"] = report.volume.str();
  j["inverse_volume"] = report.volume.is_zero() ? Json(nullptr) : Json(report.volume.reciprocal().str());
  return j;
}

Json read_document(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open \"" + path + "\"");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

}  // namespace entrocone::io
