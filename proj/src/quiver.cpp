#include "tqv/quiver.hpp"

#include "tqv/error.hpp"

namespace tqv {

FiniteQuiver::FiniteQuiver(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertices_[i], i).second) valid_ = false;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!edge_lookup_.emplace(edges_[i].id, i).second) valid_ = false;
  }
  in_.resize(vertices_.size());
  out_.resize(vertices_.size());
  in_pos_.assign(edges_.size(), npos);
  src_.reserve(edges_.size());
  rng_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto s = find_vertex(edges_[e].src);
    auto r = find_vertex(edges_[e].rng);
    src_.push_back(s.value_or(npos));
    rng_.push_back(r.value_or(npos));
    if (s) out_[*s].push_back(e);
    if (r) {
      in_pos_[e] = in_[*r].size();
      in_[*r].push_back(e);
    }
    if (!s || !r || sgn(edges_[e].weight) <= 0) valid_ = false;
  }
}

std::optional<std::size_t> FiniteQuiver::find_vertex(const VertexId& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteQuiver::find_edge(const EdgeId& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteQuiver::vertex_index(const VertexId& id) const {
  if (auto i = find_vertex(id)) return *i;
  throw InputError("unknown vertex \"" + id + "\"");
}

std::size_t FiniteQuiver::edge_index(const EdgeId& id) const {
  if (auto i = find_edge(id)) return *i;
  throw InputError("unknown edge \"" + id + "\"");
}

bool same_quiver(const FiniteQuiver& a, const FiniteQuiver& b) {
  return &a == &b || a == b;
}

std::string Violation::message() const {
  switch (kind) {
    case Kind::kDuplicateVertex:
      return "duplicate vertex " + id;
    case Kind::kDuplicateEdge:
      return "duplicate edge " + id;
    case Kind::kDanglingSrc:
      return "dangling src " + id;
    case Kind::kDanglingRng:
      return "dangling rng " + id;
    case Kind::kNonPositiveWeight:
      return "non-positive weight " + id;
  }
  return "unknown violation " + id;
}

ValidationReport validate(const FiniteQuiver& q) {
  ValidationReport report;
  std::unordered_map<std::string, int> seen;
  for (const auto& v : q.vertices()) {
    if (seen[v]++ == 1) report.violations.push_back({Violation::Kind::kDuplicateVertex, v});
  }
  seen.clear();
  for (const auto& e : q.edges()) {
    if (seen[e.id]++ == 1) report.violations.push_back({Violation::Kind::kDuplicateEdge, e.id});
  }
  for (const auto& e : q.edges()) {
    if (!q.find_vertex(e.src)) report.violations.push_back({Violation::Kind::kDanglingSrc, e.id});
    if (!q.find_vertex(e.rng)) report.violations.push_back({Violation::Kind::kDanglingRng, e.id});
    if (sgn(e.weight) <= 0) {
      report.violations.push_back({Violation::Kind::kNonPositiveWeight, e.id});
    }
  }
  return report;
}

void require_valid(const FiniteQuiver& q) {
  if (q.is_valid()) return;
  auto report = validate(q);
  throw InputError("invalid quiver: " + report.violations.front().message());
}

VertexClassification classify(const FiniteQuiver& q) {
  require_valid(q);
  VertexClassification c;
  c.regular.assign(q.vertex_count(), false);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto& id = q.vertices()[v];
    bool sink = q.out_edges(v).empty();
    // Every vertex of a finite discrete quiver is finite-emitting: s^{-1}({v})
    // is finite and r restricted to any subset is a local homeomorphism.
    bool fin = true;
    if (sink) c.sinks.push_back(id);
    if (fin) c.fin.push_back(id);
    if (fin && !sink) {
      c.reg.push_back(id);
      c.regular[v] = true;
    } else {
      c.sing.push_back(id);
    }
  }
  return c;
}

std::vector<std::pair<EdgeId, Rational>> in_fiber(const FiniteQuiver& q, const VertexId& v) {
  require_valid(q);
  std::vector<std::pair<EdgeId, Rational>> out;
  for (auto e : q.in_edges(q.vertex_index(v))) out.emplace_back(q.edges()[e].id, q.weight(e));
  return out;
}

}  // namespace tqv
