#include "tqv/corr_morphism.hpp"

#include "tqv/error.hpp"

namespace tqv {

namespace {

std::string delta(const std::string& id) { return "delta_" + id; }

}  // namespace

CorrMorphism::CorrMorphism(QuiverMorphism m) : m_(std::move(m)) { require_morphism(m_); }

VertexFunction CorrMorphism::mu0(const VertexFunction& f) const {
  f.check_over(*cod());
  VertexFunction out(dom());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = f[m_.vmap(v)];
  return out;
}

EdgeVector CorrMorphism::mu1(const EdgeVector& xi) const {
  xi.check_over(*cod());
  EdgeVector out(dom());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = xi[m_.emap(e)];
  return out;
}

Matrix CorrMorphism::mu0_matrix() const {
  Matrix out(dom()->vertex_count(), cod()->vertex_count());
  for (std::size_t v = 0; v < out.rows(); ++v) out(v, m_.vmap(v)) = Scalar(1);
  return out;
}

Matrix CorrMorphism::mu1_matrix() const {
  Matrix out(dom()->edge_count(), cod()->edge_count());
  for (std::size_t e = 0; e < out.rows(); ++e) out(e, m_.emap(e)) = Scalar(1);
  return out;
}

CorrMorphism build_corr_morphism(const QuiverMorphism& m) { return CorrMorphism(m); }

FiberBlockOperator mu1_super(const CorrMorphism& cm, const std::vector<RankOnePair>& pairs) {
  if (!check_regular(cm.morphism()).a2_ok()) {
    throw InputError("psi^(1) is only defined along morphisms satisfying (A2)");
  }
  FiberBlockOperator out(cm.dom());
  for (const auto& [xi, eta] : pairs) out += theta(cm.mu1(xi), cm.mu1(eta));
  return out;
}

FiberBlockOperator mu1_super(const CorrMorphism& cm, const FiberBlockOperator& t) {
  if (!same_quiver(*t.quiver(), *cm.cod())) throw InputError("operator is not over the codomain");
  return mu1_super(cm, rank_one_decompose(t));
}

CovarianceReport check_covariance(const CorrMorphism& cm) {
  const auto& dq = cm.dom();
  const auto& cq = cm.cod();
  const auto& dom = *dq;
  const auto& cod = *cq;
  const auto& m = cm.morphism();
  CovarianceReport report;

  // C1 on (delta_w, delta_x).
  for (std::size_t w = 0; w < cod.vertex_count(); ++w) {
    auto f = VertexFunction::delta(cq, cod.vertices()[w]);
    for (std::size_t x = 0; x < cod.edge_count(); ++x) {
      auto xi = EdgeVector::delta(cq, cod.edges()[x].id);
      auto lhs = cm.mu1(left_action(f, xi));
      auto rhs = left_action(cm.mu0(f), cm.mu1(xi));
      for (std::size_t e = 0; e < dom.edge_count(); ++e) {
        if (lhs[e] != rhs[e]) {
          report.c1.witnesses.push_back({"(" + delta(cod.vertices()[w]) + ", " +
                                             delta(cod.edges()[x].id) + ")",
                                         dom.edges()[e].id,
                                         pretty_scalar(lhs[e]) + " != " + pretty_scalar(rhs[e])});
          break;
        }
      }
    }
  }

  // C2 on (delta_x, delta_y); every failing dom vertex is recorded.
  for (std::size_t x = 0; x < cod.edge_count(); ++x) {
    auto xi = EdgeVector::delta(cq, cod.edges()[x].id);
    auto mxi = cm.mu1(xi);
    for (std::size_t y = 0; y < cod.edge_count(); ++y) {
      auto eta = EdgeVector::delta(cq, cod.edges()[y].id);
      auto lhs = cm.mu0(inner_product(xi, eta));
      auto rhs = inner_product(mxi, cm.mu1(eta));
      for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
        if (lhs[v] != rhs[v]) {
          report.c2.witnesses.push_back({"(" + delta(cod.edges()[x].id) + ", " +
                                             delta(cod.edges()[y].id) + ")",
                                         dom.vertices()[v],
                                         pretty_scalar(lhs[v]) + " != " + pretty_scalar(rhs[v])});
        }
      }
    }
  }

  auto dom_class = classify(dom);
  auto cod_class = classify(cod);

  // C3: mu0 maps C_0(F_reg) into C_0(E_reg).
  for (std::size_t w = 0; w < cod.vertex_count(); ++w) {
    if (!cod_class.regular[w]) continue;
    for (std::size_t v = 0; v < dom.vertex_count(); ++v) {
      if (m.vmap(v) == w && !dom_class.regular[v]) {
        report.c3.witnesses.push_back({delta(cod.vertices()[w]), dom.vertices()[v],
                                       "mu0 image not supported in regular vertices"});
      }
    }
  }

  // C4 on delta_w for regular w, two routes.
  bool a2 = check_regular(m).a2_ok();
  if (!a2) {
    report.c4.note = "psi^(1) undefined: (A2) fails";
    report.c4_operator_route = false;
  }
  for (std::size_t w = 0; w < cod.vertex_count(); ++w) {
    if (!cod_class.regular[w]) continue;
    auto f = VertexFunction::delta(cq, cod.vertices()[w]);
    auto mf = cm.mu0(f);

    EdgeVector f_src(cq);
    for (std::size_t x = 0; x < cod.edge_count(); ++x) f_src[x] = f[cod.src(x)];
    EdgeVector mf_src(dq);
    for (std::size_t e = 0; e < dom.edge_count(); ++e) mf_src[e] = mf[dom.src(e)];
    bool reduction = cm.mu1(f_src) == mf_src;

    bool op = false;
    if (a2) op = phi(mf) == mu1_super(cm, phi(f));

    report.c4_reduction_route = report.c4_reduction_route && reduction;
    if (a2) report.c4_operator_route = report.c4_operator_route && op;
    if (!reduction || !op) {
      std::string detail;
      if (!reduction) detail = "mu1(f o s_F) != mu0(f) o s_E";
      if (!op) {
        if (!detail.empty()) detail += "; ";
        detail += a2 ? "phi_E(mu0 f) != psi^(1)(phi_F f)" : "operator route unavailable";
      }
      if (a2 && reduction != op) detail += " (routes disagree)";
      report.c4.witnesses.push_back({delta(cod.vertices()[w]), cod.vertices()[w], detail});
    }
  }
  return report;
}

bool c4lemma_check(const CorrMorphism& cm, const EdgeVector& g) {
  g.check_over(*cm.cod());
  return mu1_super(cm, sigma(g)) == sigma(cm.mu1(g));
}

bool contraction_check(const CorrMorphism& cm, const EdgeVector& xi) {
  return norm_squared(cm.mu1(xi)) <= norm_squared(xi);
}

}  // namespace tqv
