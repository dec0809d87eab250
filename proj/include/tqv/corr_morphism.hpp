#ifndef TQV_CORR_MORPHISM_HPP_
#define TQV_CORR_MORPHISM_HPP_

#include <string>
#include <vector>

#include "tqv/correspondence.hpp"
#include "tqv/linalg.hpp"
#include "tqv/morphism.hpp"

namespace tqv {

/// The pullback pair (mu1, mu0) from (X_F, A_F) to (X_E, A_E) attached to a
/// quiver morphism m: E -> F. Defined for every quiver morphism; the
/// correspondence-morphism conditions are verified separately.
class CorrMorphism {
 public:
  /// Throws InputError if m does not commute with source and range.
  explicit CorrMorphism(QuiverMorphism m);

  const QuiverMorphism& morphism() const { return m_; }
  const QuiverPtr& dom() const { return m_.dom(); }
  const QuiverPtr& cod() const { return m_.cod(); }

  /// f o vmap.
  VertexFunction mu0(const VertexFunction& f) const;
  /// xi o emap.
  EdgeVector mu1(const EdgeVector& xi) const;

  /// 0/1 matrices of the two pullbacks, rows indexed by dom, columns by cod.
  Matrix mu0_matrix() const;
  Matrix mu1_matrix() const;

 private:
  QuiverMorphism m_;
};

CorrMorphism build_corr_morphism(const QuiverMorphism& m);

/// psi^(1) on compacts: decompose T into rank-one pieces, pull both legs
/// back, and sum. Throws InputError when the morphism fails (A2).
FiberBlockOperator mu1_super(const CorrMorphism& cm, const FiberBlockOperator& t);

/// Same map evaluated on an explicit decomposition of some operator over cod.
FiberBlockOperator mu1_super(const CorrMorphism& cm, const std::vector<RankOnePair>& pairs);

struct Witness {
  std::string element;   // basis element(s), e.g. "delta_u" or "(delta_e1, delta_e2)"
  std::string location;  // dom vertex or edge where the identity fails
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConditionResult {
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return witnesses.empty(); }
  const Witness& first() const { return witnesses.front(); }
};

struct CovarianceReport {
  ConditionResult c1;
  ConditionResult c2;
  ConditionResult c3;
  ConditionResult c4;
  /// Verdicts of the two independent C4 routes. Both must agree.
  bool c4_reduction_route = true;
  bool c4_operator_route = true;

  bool correspondence_ok() const { return c1.passed() && c2.passed(); }
  bool ok() const { return c1.passed() && c2.passed() && c3.passed() && c4.passed(); }
};

/// C1, C2 on all basis pairs; C3 by support of pulled-back indicators of
/// regular vertices; C4 two ways (edge-function reduction and the operator
/// identity phi_E(mu0 f) = mu1_super(phi_F f)).
CovarianceReport check_covariance(const CorrMorphism& cm);

/// mu1_super(sigma_F(g)) == sigma_E(mu1(g)), exactly.
bool c4lemma_check(const CorrMorphism& cm, const EdgeVector& g);

/// sup <mu1 xi, mu1 xi> <= sup <xi, xi>, compared as rationals.
bool contraction_check(const CorrMorphism& cm, const EdgeVector& xi);

}  // namespace tqv

#endif  // TQV_CORR_MORPHISM_HPP_
