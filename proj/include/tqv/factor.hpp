#ifndef TQV_FACTOR_HPP_
#define TQV_FACTOR_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "tqv/morphism.hpp"
#include "tqv/quiver.hpp"

namespace tqv {

/// True iff every weight is 1, i.e. q is a topological graph with counting
/// measures on the range fibers.
bool is_counting(const FiniteQuiver& q);

struct FactorMapReport {
  struct F2Failure {
    EdgeId cod_edge;
    VertexId dom_vertex;
    std::size_t preimages;  // in r^{-1}(dom_vertex); must be exactly 1
    friend bool operator==(const F2Failure&, const F2Failure&) = default;
  };

  /// Extension to one-point compactifications sending infinity to infinity
  /// exists because every map of finite discrete spaces is proper.
  std::string compactification_note =
      "extension to one-point compactifications automatic for finite spaces";
  std::vector<EdgeId> f1_failures;
  std::vector<F2Failure> f2_failures;
  /// Vertices over a regular codomain vertex that emit no edge.
  std::vector<VertexId> regular_failures;

  bool f1_ok() const { return f1_failures.empty(); }
  bool f2_ok() const { return f2_failures.empty(); }
  bool regular_ok() const { return regular_failures.empty(); }
  bool ok() const { return f1_ok() && f2_ok() && regular_ok(); }
};

/// Throws InputError unless both quivers carry counting measures.
FactorMapReport check_factor_map(const QuiverMorphism& m);

/// [regular factor map] == [regular quiver morphism]. A false result means
/// one of the two checkers is wrong.
bool equivalence_check(const QuiverMorphism& m);

}  // namespace tqv

#endif  // TQV_FACTOR_HPP_
