#include "tqv/morphism.hpp"

#include <algorithm>

#include "tqv/error.hpp"

namespace tqv {

QuiverMorphism::QuiverMorphism(QuiverPtr dom, QuiverPtr cod, std::vector<std::size_t> vmap,
                               std::vector<std::size_t> emap)
    : dom_(std::move(dom)), cod_(std::move(cod)), vmap_(std::move(vmap)), emap_(std::move(emap)) {
  require_valid(*dom_);
  require_valid(*cod_);
  if (vmap_.size() != dom_->vertex_count()) throw InputError("vertex map is not total");
  if (emap_.size() != dom_->edge_count()) throw InputError("edge map is not total");
  for (auto w : vmap_) {
    if (w >= cod_->vertex_count()) throw InputError("vertex map leaves codomain");
  }
  for (auto x : emap_) {
    if (x >= cod_->edge_count()) throw InputError("edge map leaves codomain");
  }
}

QuiverMorphism QuiverMorphism::from_maps(QuiverPtr dom, QuiverPtr cod,
                                         const std::map<VertexId, VertexId>& vmap,
                                         const std::map<EdgeId, EdgeId>& emap) {
  require_valid(*dom);
  require_valid(*cod);
  std::vector<std::size_t> vm;
  for (const auto& v : dom->vertices()) {
    auto it = vmap.find(v);
    if (it == vmap.end()) throw InputError("vertex map is not total: missing " + v);
    vm.push_back(cod->vertex_index(it->second));
  }
  std::vector<std::size_t> em;
  for (const auto& e : dom->edges()) {
    auto it = emap.find(e.id);
    if (it == emap.end()) throw InputError("edge map is not total: missing " + e.id);
    em.push_back(cod->edge_index(it->second));
  }
  for (const auto& [k, _] : vmap) dom->vertex_index(k);
  for (const auto& [k, _] : emap) dom->edge_index(k);
  return QuiverMorphism(std::move(dom), std::move(cod), std::move(vm), std::move(em));
}

const VertexId& QuiverMorphism::vmap(const VertexId& v) const {
  return cod_->vertices()[vmap_[dom_->vertex_index(v)]];
}

const EdgeId& QuiverMorphism::emap(const EdgeId& e) const {
  return cod_->edges()[emap_[dom_->edge_index(e)]].id;
}

SquareReport check_morphism(const QuiverMorphism& m) {
  const auto& dom = *m.dom();
  const auto& cod = *m.cod();
  SquareReport report;
  for (std::size_t e = 0; e < dom.edge_count(); ++e) {
    auto x = m.emap(e);
    if (m.vmap(dom.src(e)) != cod.src(x)) {
      report.failures.push_back({dom.edges()[e].id, SquareReport::Square::kSrc});
    }
    if (m.vmap(dom.rng(e)) != cod.rng(x)) {
      report.failures.push_back({dom.edges()[e].id, SquareReport::Square::kRng});
    }
  }
  return report;
}

void require_morphism(const QuiverMorphism& m) {
  auto r = check_morphism(m);
  if (!r.ok()) {
    throw InputError("not a quiver morphism: square fails on edge " + r.failures.front().edge);
  }
}

bool RegularityReport::a2_ok_at(const VertexId& v) const {
  return std::none_of(a2_failures.begin(), a2_failures.end(),
                      [&](const A2Failure& f) { return f.vertex == v; });
}

std::string to_string(RegularityReport::A2Reason r) {
  switch (r) {
    case RegularityReport::A2Reason::kFiberNotInjective:
      return "fiber-not-injective";
    case RegularityReport::A2Reason::kNotOntoTargetFiber:
      return "not-onto-target-fiber";
    case RegularityReport::A2Reason::kWeightMismatch:
      return "weight-mismatch";
  }
  return "unknown";
}

RegularityReport check_regular(const QuiverMorphism& m) {
  require_morphism(m);
  const auto& dom = *m.dom();
  const auto& cod = *m.cod();
  RegularityReport report;

  for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
    const auto& vid = dom.vertices()[v];
    const auto& target_fiber = cod.in_edges(m.vmap(v));
    std::vector<bool> hit(cod.edge_count(), false);
    for (auto e : dom.in_edges(v)) {
      auto x = m.emap(e);
      const auto& eid = dom.edges()[e].id;
      if (hit[x]) {
        report.a2_failures.push_back({vid, RegularityReport::A2Reason::kFiberNotInjective, eid});
      }
      hit[x] = true;
      if (cod.weight(x) != dom.weight(e)) {
        report.a2_failures.push_back({vid, RegularityReport::A2Reason::kWeightMismatch, eid});
      }
    }
    for (auto x : target_fiber) {
      if (!hit[x]) {
        report.a2_failures.push_back(
            {vid, RegularityReport::A2Reason::kNotOntoTargetFiber, cod.edges()[x].id});
      }
    }
  }

  auto dom_class = classify(dom);
  auto cod_class = classify(cod);
  for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
    if (cod_class.regular[m.vmap(v)] && !dom_class.regular[v]) {
      report.a3_failures.push_back(dom.vertices()[v]);
    }
  }
  return report;
}

bool is_regular(const QuiverMorphism& m) {
  return check_morphism(m).ok() && check_regular(m).ok();
}

EdgeMeasure pushforward(const QuiverMorphism& m, const VertexId& v) {
  const auto& dom = *m.dom();
  const auto& cod = *m.cod();
  EdgeMeasure out;
  for (auto e : dom.in_edges(dom.vertex_index(v))) {
    out[cod.edges()[m.emap(e)].id] += dom.weight(e);
  }
  return out;
}

EdgeMeasure fiber_measure(const FiniteQuiver& q, const VertexId& w) {
  EdgeMeasure out;
  for (auto x : q.in_edges(q.vertex_index(w))) out[q.edges()[x].id] = q.weight(x);
  return out;
}

QuiverMorphism compose(const QuiverMorphism& n, const QuiverMorphism& m) {
  if (!same_quiver(*m.cod(), *n.dom())) {
    throw InputError("cannot compose: codomain of the first map is not the domain of the second");
  }
  std::vector<std::size_t> vm(m.dom()->vertex_count());
  std::vector<std::size_t> em(m.dom()->edge_count());
  for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = n.vmap(m.vmap(v));
  for (std::size_t e = 0; e < em.size(); ++e) em[e] = n.emap(m.emap(e));
  return QuiverMorphism(m.dom(), n.cod(), std::move(vm), std::move(em));
}

QuiverMorphism identity(const QuiverPtr& q) {
  std::vector<std::size_t> vm(q->vertex_count());
  std::vector<std::size_t> em(q->edge_count());
  for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = i;
  for (std::size_t i = 0; i < em.size(); ++i) em[i] = i;
  return QuiverMorphism(q, q, std::move(vm), std::move(em));
}

bool integral_identity_check(const QuiverMorphism& m, const EdgeVector& xi) {
  xi.check_over(*m.cod());
  if (!is_regular(m)) throw InputError("integral identity requires a regular morphism");
  const auto& dom = *m.dom();
  const auto& cod = *m.cod();
  for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
    Scalar over_target;
    for (auto x : cod.in_edges(m.vmap(v))) over_target += xi[x] * Scalar(cod.weight(x));
    Scalar over_fiber;
    for (auto e : dom.in_edges(v)) over_fiber += xi[m.emap(e)] * Scalar(dom.weight(e));
    if (over_target != over_fiber) return false;
  }
  return true;
}

}  // namespace tqv
