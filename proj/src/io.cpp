#include "tqv/io.hpp"

#include <fstream>
#include <map>

#include "tqv/error.hpp"

namespace tqv {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::map<std::string, std::string> string_map(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object of strings");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw InputError(where + "." + it.key() + ": expected a string");
    out.emplace(it.key(), it.value().get<std::string>());
  }
  return out;
}

json witnesses(const ConditionResult& c) {
  json arr = json::array();
  for (const auto& w : c.witnesses) {
    arr.push_back({{"element", w.element}, {"location", w.location}, {"detail", w.detail}});
  }
  json out = {{"pass", c.passed()}, {"witnesses", arr}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

template <typename F>
json function_json(const F& f, const std::vector<std::string>& ids) {
  json out = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) out[ids[i]] = format_scalar(f[i]);
  return out;
}

}  // namespace

json quiver_to_json(const FiniteQuiver& q) {
  json edges = json::array();
  for (const auto& e : q.edges()) {
    edges.push_back(
        {{"id", e.id}, {"src", e.src}, {"rng", e.rng}, {"weight", format_rational(e.weight)}});
  }
  return {{"vertices", q.vertices()}, {"edges", edges}};
}

QuiverPtr quiver_from_json(const json& j) {
  const auto& vs = field(j, "vertices", "quiver");
  if (!vs.is_array()) throw InputError("quiver.vertices: expected an array");
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) {
      throw InputError("quiver.vertices[" + std::to_string(i) + "]: expected a string");
    }
    vertices.push_back(vs[i].get<std::string>());
  }
  const auto& es = field(j, "edges", "quiver");
  if (!es.is_array()) throw InputError("quiver.edges: expected an array");
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string where = "quiver.edges[" + std::to_string(i) + "]";
    auto weight_text = string_field(es[i], "weight", where);
    Rational weight;
    try {
      weight = parse_rational(weight_text);
    } catch (const InputError& err) {
      throw InputError(where + ".weight: " + err.what());
    }
    edges.push_back({string_field(es[i], "id", where), string_field(es[i], "src", where),
                     string_field(es[i], "rng", where), weight});
  }
  return make_quiver(std::move(vertices), std::move(edges));
}

json morphism_to_json(const QuiverMorphism& m) {
  json vmap = json::object();
  for (std::size_t v = 0; v < m.dom()->vertex_count(); ++v) {
    vmap[m.dom()->vertices()[v]] = m.cod()->vertices()[m.vmap(v)];
  }
  json emap = json::object();
  for (std::size_t e = 0; e < m.dom()->edge_count(); ++e) {
    emap[m.dom()->edges()[e].id] = m.cod()->edges()[m.emap(e)].id;
  }
  return {{"dom", quiver_to_json(*m.dom())},
          {"cod", quiver_to_json(*m.cod())},
          {"vmap", vmap},
          {"emap", emap}};
}

QuiverMorphism morphism_from_json(const json& j, const std::filesystem::path& base_dir) {
  auto side = [&](const char* key) -> QuiverPtr {
    const auto& v = field(j, key, "morphism");
    if (v.is_string()) {
      std::filesystem::path p = v.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      return load_quiver(p);
    }
    if (v.is_object()) return quiver_from_json(v);
    throw InputError(std::string("morphism.") + key + ": expected a path or a quiver object");
  };
  auto dom = side("dom");
  auto cod = side("cod");
  auto vmap = string_map(field(j, "vmap", "morphism"), "morphism.vmap");
  auto emap = string_map(field(j, "emap", "morphism"), "morphism.emap");
  return QuiverMorphism::from_maps(dom, cod, vmap, emap);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

QuiverPtr load_quiver(const std::filesystem::path& path) {
  try {
    return quiver_from_json(read_json_file(path));
  } catch (const InputError& err) {
    std::string msg = err.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw InputError(path.string() + ": " + msg);
  }
}

QuiverMorphism load_morphism(const std::filesystem::path& path) {
  auto j = read_json_file(path);
  try {
    return morphism_from_json(j, path.parent_path());
  } catch (const InputError& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

json to_json(const ValidationReport& r) {
  json arr = json::array();
  for (const auto& v : r.violations) arr.push_back(v.message());
  return {{"ok", r.ok()}, {"violations", arr}};
}

json to_json(const VertexClassification& c) {
  return {{"sinks", c.sinks}, {"fin", c.fin}, {"reg", c.reg}, {"sing", c.sing}};
}

json to_json(const SquareReport& r) {
  json arr = json::array();
  for (const auto& f : r.failures) {
    arr.push_back({{"edge", f.edge}, {"square", f.square == SquareReport::Square::kSrc ? "src" : "rng"}});
  }
  return {{"ok", r.ok()}, {"failures", arr}};
}

json to_json(const RegularityReport& r) {
  json a2 = json::array();
  for (const auto& f : r.a2_failures) {
    a2.push_back({{"vertex", f.vertex}, {"reason", to_string(f.reason)}, {"edge", f.edge}});
  }
  return {{"ok", r.ok()},
          {"a1", {{"pass", true}, {"note", r.a1_note}}},
          {"a2_failures", a2},
          {"a3_failures", r.a3_failures}};
}

json to_json(const CovarianceReport& r) {
  json c4 = witnesses(r.c4);
  c4["reduction_route"] = r.c4_reduction_route;
  c4["operator_route"] = r.c4_operator_route;
  return {{"ok", r.ok()},
          {"c1", witnesses(r.c1)},
          {"c2", witnesses(r.c2)},
          {"c3", witnesses(r.c3)},
          {"c4", c4}};
}

json to_json(const FactorMapReport& r) {
  json f2 = json::array();
  for (const auto& f : r.f2_failures) {
    f2.push_back({{"cod_edge", f.cod_edge}, {"dom_vertex", f.dom_vertex}, {"preimages", f.preimages}});
  }
  return {{"ok", r.ok()},
          {"note", r.compactification_note},
          {"f1", {{"pass", r.f1_ok()}, {"failures", r.f1_failures}}},
          {"f2", {{"pass", r.f2_ok()}, {"failures", f2}}},
          {"regular_factor", {{"pass", r.regular_ok()}, {"failures", r.regular_failures}}}};
}

json to_json(const VerificationReport& r) {
  json arr = json::array();
  for (const auto& e : r.entries) {
    json entry = {{"tag", e.tag}, {"relation", e.relation}, {"pass", e.passed}};
    if (!e.error.empty()) entry["error"] = e.error;
    arr.push_back(entry);
  }
  return {{"ok", r.ok()}, {"relations", arr}};
}

json to_json(const Presentation& p) {
  json arr = json::array();
  for (const auto& r : p.relations) {
    arr.push_back({{"tag", r.tag},
                   {"lhs", to_string(*p.quiver, r.lhs)},
                   {"rhs", to_string(*p.quiver, r.rhs)}});
  }
  return {{"relations", arr}};
}

json to_json(const GeneratorMap& g) {
  json ps = json::object();
  for (std::size_t w = 0; w < g.source()->vertex_count(); ++w) {
    ps["p_" + g.source()->vertices()[w]] = to_string(g.p_image(w));
  }
  json ts = json::object();
  for (std::size_t x = 0; x < g.source()->edge_count(); ++x) {
    ts["t_" + g.source()->edges()[x].id] = to_string(g.t_image(x));
  }
  return {{"projections", ps}, {"isometries", ts}};
}

json to_json(const VertexFunction& f) { return function_json(f, f.quiver()->vertices()); }

json to_json(const EdgeVector& xi) {
  std::vector<std::string> ids;
  for (const auto& e : xi.quiver()->edges()) ids.push_back(e.id);
  return function_json(xi, ids);
}

}  // namespace tqv
