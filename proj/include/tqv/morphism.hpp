#ifndef TQV_MORPHISM_HPP_
#define TQV_MORPHISM_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tqv/elements.hpp"
#include "tqv/quiver.hpp"

namespace tqv {

/// A pair (vertex map, edge map) between two valid quivers. The maps are
/// total by construction; whether they commute with source and range is a
/// property checked by check_morphism().
class QuiverMorphism {
 public:
  QuiverMorphism(QuiverPtr dom, QuiverPtr cod, std::vector<std::size_t> vmap,
                 std::vector<std::size_t> emap);

  /// Builds from id-keyed maps. Throws InputError unless both maps are total
  /// on dom and land in cod.
  static QuiverMorphism from_maps(QuiverPtr dom, QuiverPtr cod,
                                  const std::map<VertexId, VertexId>& vmap,
                                  const std::map<EdgeId, EdgeId>& emap);

  const QuiverPtr& dom() const { return dom_; }
  const QuiverPtr& cod() const { return cod_; }
  std::size_t vmap(std::size_t v) const { return vmap_[v]; }
  std::size_t emap(std::size_t e) const { return emap_[e]; }
  const std::vector<std::size_t>& vertex_map() const { return vmap_; }
  const std::vector<std::size_t>& edge_map() const { return emap_; }

  const VertexId& vmap(const VertexId& v) const;
  const EdgeId& emap(const EdgeId& e) const;

  friend bool operator==(const QuiverMorphism& a, const QuiverMorphism& b) {
    return same_quiver(*a.dom_, *b.dom_) && same_quiver(*a.cod_, *b.cod_) &&
           a.vmap_ == b.vmap_ && a.emap_ == b.emap_;
  }

 private:
  QuiverPtr dom_;
  QuiverPtr cod_;
  std::vector<std::size_t> vmap_;
  std::vector<std::size_t> emap_;
};

struct SquareReport {
  enum class Square { kSrc, kRng };
  struct Failure {
    EdgeId edge;
    Square square;
    friend bool operator==(const Failure&, const Failure&) = default;
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

SquareReport check_morphism(const QuiverMorphism& m);

/// Throws InputError if m does not commute with source and range.
void require_morphism(const QuiverMorphism& m);

struct RegularityReport {
  enum class A2Reason { kFiberNotInjective, kNotOntoTargetFiber, kWeightMismatch };
  struct A2Failure {
    VertexId vertex;
    A2Reason reason;
    /// The colliding or mismatched dom edge, or the missed cod edge.
    EdgeId edge;
    friend bool operator==(const A2Failure&, const A2Failure&) = default;
  };

  /// Properness holds for every map out of a finite discrete space.
  std::string a1_note = "proper: automatic for finite discrete spaces";
  std::vector<A2Failure> a2_failures;
  std::vector<VertexId> a3_failures;

  bool a2_ok() const { return a2_failures.empty(); }
  bool a2_ok_at(const VertexId& v) const;
  bool a3_ok() const { return a3_failures.empty(); }
  bool ok() const { return a2_ok() && a3_ok(); }
};

std::string to_string(RegularityReport::A2Reason r);

/// Fibers are scanned in edge-list order, so reports are deterministic.
RegularityReport check_regular(const QuiverMorphism& m);

bool is_regular(const QuiverMorphism& m);

/// Discrete measure on cod edges; absent keys carry mass zero.
using EdgeMeasure = std::map<EdgeId, Rational>;

/// m^1_*(lambda^v): x -> sum of weight(e) over e in r^{-1}(v) with emap(e) = x.
EdgeMeasure pushforward(const QuiverMorphism& m, const VertexId& v);

/// lambda^w on cod as an EdgeMeasure.
EdgeMeasure fiber_measure(const FiniteQuiver& q, const VertexId& w);

/// n after m. Throws InputError unless m.cod() is n.dom().
QuiverMorphism compose(const QuiverMorphism& n, const QuiverMorphism& m);

QuiverMorphism identity(const QuiverPtr& q);

/// Checks, at every dom vertex v, that integrating xi over the target fiber
/// equals integrating xi o m^1 over r^{-1}(v). Requires a regular m.
bool integral_identity_check(const QuiverMorphism& m, const EdgeVector& xi);

}  // namespace tqv

#endif  // TQV_MORPHISM_HPP_
