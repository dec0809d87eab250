#ifndef TQV_CORRESPONDENCE_HPP_
#define TQV_CORRESPONDENCE_HPP_

#include <utility>
#include <vector>

#include "tqv/elements.hpp"
#include "tqv/linalg.hpp"
#include "tqv/quiver.hpp"

namespace tqv {

/// Adjointable operator on X_E, stored as one square block per range fiber.
///
/// Block v is indexed by in_edges(v) in edge-list order. Commuting with the
/// right action of A_E is exactly this block-diagonal shape, so every value
/// of the type is A-linear. Vertices that receive no edges carry a 0x0 block.
class FiberBlockOperator {
 public:
  /// Zero operator.
  explicit FiberBlockOperator(QuiverPtr q);
  FiberBlockOperator(QuiverPtr q, std::vector<Matrix> blocks);

  static FiberBlockOperator identity(QuiverPtr q);

  const QuiverPtr& quiver() const { return q_; }
  const Matrix& block(std::size_t v) const { return blocks_[v]; }
  Matrix& block(std::size_t v) { return blocks_[v]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// Matrix entry for edges x, y; zero when they lie in different fibers.
  Scalar entry(std::size_t x, std::size_t y) const;

  EdgeVector apply(const EdgeVector& zeta) const;

  /// W^{-1} M^dagger W on each block, W the diagonal of fiber weights.
  FiberBlockOperator adjoint() const;

  bool is_zero() const;

  FiberBlockOperator& operator+=(const FiberBlockOperator& o);
  FiberBlockOperator& operator-=(const FiberBlockOperator& o);
  FiberBlockOperator& operator*=(const Scalar& s);
  friend FiberBlockOperator operator+(FiberBlockOperator a, const FiberBlockOperator& b) {
    return a += b;
  }
  friend FiberBlockOperator operator-(FiberBlockOperator a, const FiberBlockOperator& b) {
    return a -= b;
  }
  friend FiberBlockOperator operator*(FiberBlockOperator a, const Scalar& s) { return a *= s; }
  friend FiberBlockOperator operator*(const Scalar& s, FiberBlockOperator a) { return a *= s; }
  /// Composition: (a * b)(zeta) = a(b(zeta)).
  friend FiberBlockOperator operator*(const FiberBlockOperator& a, const FiberBlockOperator& b);

  friend bool operator==(const FiberBlockOperator& a, const FiberBlockOperator& b) {
    return same_quiver(*a.q_, *b.q_) && a.blocks_ == b.blocks_;
  }

 private:
  void check_same(const FiberBlockOperator& o) const;

  QuiverPtr q_;
  std::vector<Matrix> blocks_;
};

FiberBlockOperator adjoint(const FiberBlockOperator& t);

/// <xi, eta>(v) = sum over r^{-1}(v) of conj(xi(e)) eta(e) weight(e).
VertexFunction inner_product(const EdgeVector& xi, const EdgeVector& eta);

/// (f . xi)(e) = f(src e) xi(e).
EdgeVector left_action(const VertexFunction& f, const EdgeVector& xi);
/// (xi . f)(e) = xi(e) f(rng e).
EdgeVector right_action(const EdgeVector& xi, const VertexFunction& f);

struct ModuleActions {
  EdgeVector left;
  EdgeVector right;
};
ModuleActions module_actions(const VertexFunction& f, const EdgeVector& xi);

/// max_v <xi, xi>(v), exact. Zero on a quiver without vertices.
Rational norm_squared(const EdgeVector& xi);
/// sqrt(norm_squared); floating point, for reporting only.
double norm(const EdgeVector& xi);

/// theta_{xi,eta}(zeta) = xi . <eta, zeta>.
FiberBlockOperator theta(const EdgeVector& xi, const EdgeVector& eta);

/// Multiplication operator by an edge function.
FiberBlockOperator sigma(const EdgeVector& g);

/// Left action: phi(f) = sigma(f o src).
FiberBlockOperator phi(const VertexFunction& f);

using RankOnePair = std::pair<EdgeVector, EdgeVector>;

/// Matrix-unit decomposition: one (T[x,y] delta_x, delta_y / weight(y)) per
/// nonzero entry, in vertex then row then column order.
std::vector<RankOnePair> rank_one_decompose(const FiberBlockOperator& t);

/// Sum of theta over a list of pairs; the zero operator for an empty list.
FiberBlockOperator sum_of_thetas(const QuiverPtr& q, const std::vector<RankOnePair>& pairs);

/// Vertices spanning the ideal J_X; for a quiver correspondence these are the
/// regular vertices.
std::vector<VertexId> ideal_JX(const FiniteQuiver& q);

}  // namespace tqv

#endif  // TQV_CORRESPONDENCE_HPP_
