#ifndef TQV_PIMSNER_HPP_
#define TQV_PIMSNER_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tqv/linalg.hpp"
#include "tqv/morphism.hpp"
#include "tqv/quiver.hpp"

namespace tqv {

// ---------------------------------------------------------------------------
// Degree-<=2 fragment
// ---------------------------------------------------------------------------

enum class BasisKind { kP, kT, kTStar, kTT };

/// P_i, T_i, Tstar_i, or TT_{i,j} (= t_i t_j*, only for rng(i) == rng(j)).
struct BasisKey {
  BasisKind kind;
  std::size_t i;
  std::size_t j = 0;

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Gauge degree of a basis element: 0 for P and TT, 1 for T, -1 for Tstar.
int degree(BasisKind kind);

/// Exact linear combination of fragment basis elements over one quiver.
/// Zero coefficients are never stored.
class Deg2Element {
 public:
  explicit Deg2Element(QuiverPtr q) : q_(std::move(q)) {}

  static Deg2Element P(const QuiverPtr& q, std::size_t v);
  static Deg2Element T(const QuiverPtr& q, std::size_t e);
  static Deg2Element TStar(const QuiverPtr& q, std::size_t e);
  /// Zero when the ranges differ.
  static Deg2Element TT(const QuiverPtr& q, std::size_t e, std::size_t f);

  const QuiverPtr& quiver() const { return q_; }
  const std::map<BasisKey, Scalar>& terms() const { return terms_; }
  Scalar coeff(const BasisKey& k) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisKey& k, const Scalar& c);
  Deg2Element adjoint() const;

  Deg2Element& operator+=(const Deg2Element& o);
  Deg2Element& operator-=(const Deg2Element& o);
  Deg2Element& operator*=(const Scalar& s);
  friend Deg2Element operator+(Deg2Element a, const Deg2Element& b) { return a += b; }
  friend Deg2Element operator-(Deg2Element a, const Deg2Element& b) { return a -= b; }
  friend Deg2Element operator*(const Scalar& s, Deg2Element a) { return a *= s; }
  /// Straightened product. Throws FragmentError when a nonzero product
  /// leaves the fragment (e.g. t_e t_f with rng(e) = src(f)).
  friend Deg2Element operator*(const Deg2Element& a, const Deg2Element& b);

  /// Coefficientwise equality (not modulo the covariance relations).
  friend bool operator==(const Deg2Element& a, const Deg2Element& b) {
    return same_quiver(*a.q_, *b.q_) && a.terms_ == b.terms_;
  }

 private:
  void check_same(const Deg2Element& o) const;

  QuiverPtr q_;
  std::map<BasisKey, Scalar> terms_;
};

/// Human-readable form, e.g. "p_a + (1/2) t_e t_e*"; "0" for zero.
std::string to_string(const Deg2Element& x);

enum class GradingKind { kZero, kHomogeneous, kMixed };
struct Grading {
  GradingKind kind;
  int degree = 0;  // meaningful for kHomogeneous only
};

Grading grading(const Deg2Element& x);
/// Zero or homogeneous of degree d.
bool has_degree(const Deg2Element& x, int d);

// ---------------------------------------------------------------------------
// Words and the presentation
// ---------------------------------------------------------------------------

enum class Generator { kP, kT };

struct Letter {
  Generator gen;
  std::size_t index;
  bool star = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Term {
  Scalar coeff;
  Word word;
};

/// Linear combination of words; empty means 0.
using Expression = std::vector<Term>;

/// Reduces a product of generator symbols to fragment normal form.
Deg2Element deg2_reduce(const QuiverPtr& q, const Word& word);
Deg2Element deg2_reduce(const QuiverPtr& q, const Expression& expr);

struct Relation {
  std::string tag;  // "R1" .. "R5"
  Expression lhs;
  Expression rhs;
};

/// Generators p_v, t_e with weighted Cuntz-Krieger relations:
///   R1  p_v p_w = [v=w] p_v,  p_v* = p_v
///   R2  t_e* t_f = [e=f] weight(e) p_{rng e}
///   R3  p_v t_e = [v=src e] t_e
///   R4  t_e p_v = [v=rng e] t_e
///   R5  p_v = sum_{src e = v} weight(e)^{-1} t_e t_e*   (v regular)
struct Presentation {
  QuiverPtr quiver;
  std::vector<Relation> relations;
};

Presentation emit_presentation(const QuiverPtr& q);

std::string to_string(const FiniteQuiver& q, const Expression& expr);
/// One relation, e.g. "p_a = (1/2) t_g t_g*".
std::string to_string(const FiniteQuiver& q, const Relation& r);
/// One relation per line.
std::string to_string(const Presentation& p);

/// Decides equality modulo the span of the covariance relations (R5) by
/// exact Gaussian elimination. The reduced span is built once in the
/// constructor and only read afterwards.
class Deg2Engine {
 public:
  explicit Deg2Engine(QuiverPtr q);

  const QuiverPtr& quiver() const { return q_; }
  std::size_t dimension() const { return keys_.size(); }
  std::size_t relation_rank() const { return span_.dimension(); }
  std::vector<Scalar> coordinates(const Deg2Element& x) const;
  bool equal(const Deg2Element& x, const Deg2Element& y) const;

 private:
  QuiverPtr q_;
  std::map<BasisKey, std::size_t> keys_;
  SpanBasis span_;
};

bool deg2_equal(const QuiverPtr& q, const Deg2Element& x, const Deg2Element& y);

// ---------------------------------------------------------------------------
// Induced homomorphism
// ---------------------------------------------------------------------------

/// Assignment of fragment elements over `target` to the generators of the
/// presentation over `source`. For a morphism m: E -> F, source is F and
/// target is E.
class GeneratorMap {
 public:
  GeneratorMap(QuiverPtr source, QuiverPtr target, std::vector<Deg2Element> p_images,
               std::vector<Deg2Element> t_images);

  const QuiverPtr& source() const { return source_; }
  const QuiverPtr& target() const { return target_; }
  const Deg2Element& p_image(std::size_t w) const { return p_images_[w]; }
  const Deg2Element& t_image(std::size_t x) const { return t_images_[x]; }

  Deg2Element image(const Letter& l) const;
  /// Linear extension to the fragment over source.
  Deg2Element apply(const Deg2Element& x) const;
  /// Substitute images into every letter and reduce over target.
  Deg2Element apply(const Expression& expr) const;

  friend bool operator==(const GeneratorMap& a, const GeneratorMap& b) {
    return same_quiver(*a.source_, *b.source_) && same_quiver(*a.target_, *b.target_) &&
           a.p_images_ == b.p_images_ && a.t_images_ == b.t_images_;
  }

 private:
  QuiverPtr source_;
  QuiverPtr target_;
  std::vector<Deg2Element> p_images_;
  std::vector<Deg2Element> t_images_;
};

/// after o before: generators of before.source() to fragment over after.target().
GeneratorMap compose(const GeneratorMap& after, const GeneratorMap& before);

/// p_w -> sum_{vmap v = w} p_v, t_x -> sum_{emap e = x} t_e.
/// Throws InputError unless m is regular.
GeneratorMap induced_map(const QuiverMorphism& m);

std::string to_string(const GeneratorMap& g);

struct VerificationReport {
  struct Entry {
    std::string tag;
    std::string relation;  // the codomain relation, as text
    bool passed = false;
    std::string error;     // set when reduction left the fragment
  };
  std::vector<Entry> entries;

  bool ok() const;
};

/// Pushes every relation of the codomain presentation through the induced
/// map and decides it in the domain fragment.
VerificationReport verify_induced(const QuiverMorphism& m);

}  // namespace tqv

#endif  // TQV_PIMSNER_HPP_
