#include "tqv/factor.hpp"

#include "tqv/error.hpp"

namespace tqv {

bool is_counting(const FiniteQuiver& q) {
  require_valid(q);
  for (const auto& e : q.edges()) {
    if (e.weight != 1) return false;
  }
  return true;
}

FactorMapReport check_factor_map(const QuiverMorphism& m) {
  const auto& dom = *m.dom();
  const auto& cod = *m.cod();
  if (!is_counting(dom) || !is_counting(cod)) {
    throw InputError("factor maps are defined between topological graphs (all weights 1)");
  }
  FactorMapReport report;

  // F1: no edge is sent to infinity here, so F1 is the pair of commuting squares.
  for (std::size_t e = 0; e < dom.edge_count(); ++e) {
    auto x = m.emap(e);
    if (cod.src(x) != m.vmap(dom.src(e)) || cod.rng(x) != m.vmap(dom.rng(e))) {
      report.f1_failures.push_back(dom.edges()[e].id);
    }
  }

  // F2: unique lift of x into r^{-1}(v) whenever r(x) = vmap(v).
  for (std::size_t x = 0; x < cod.edge_count(); ++x) {
    for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
      if (cod.rng(x) != m.vmap(v)) continue;
      std::size_t count = 0;
      for (std::size_t e = 0; e < dom.edge_count(); ++e) {
        if (m.emap(e) == x && dom.rng(e) == v) ++count;
      }
      if (count != 1) report.f2_failures.push_back({cod.edges()[x].id, dom.vertices()[v], count});
    }
  }

  auto cod_class = classify(cod);
  for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
    if (cod_class.regular[m.vmap(v)] && dom.out_edges(v).empty()) {
      report.regular_failures.push_back(dom.vertices()[v]);
    }
  }
  return report;
}

bool equivalence_check(const QuiverMorphism& m) {
  bool factor = check_factor_map(m).ok();
  return factor == is_regular(m);
}

}  // namespace tqv
