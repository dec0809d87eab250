#ifndef TQV_ELEMENTS_HPP_
#define TQV_ELEMENTS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "tqv/error.hpp"
#include "tqv/quiver.hpp"
#include "tqv/scalar.hpp"

namespace tqv {

namespace detail {

/// Finite-support function on an indexed set of a fixed quiver.
template <typename Tag>
class IndexedFunction {
 public:
  IndexedFunction(QuiverPtr q, std::vector<Scalar> values)
      : q_(std::move(q)), values_(std::move(values)) {
    if (values_.size() != Tag::size(*q_)) throw InputError("function length mismatch");
  }
  explicit IndexedFunction(QuiverPtr q) : q_(std::move(q)), values_(Tag::size(*q_)) {}

  static IndexedFunction delta(QuiverPtr q, const std::string& id) {
    IndexedFunction f(q);
    f.values_[Tag::index(*q, id)] = Scalar(1);
    return f;
  }
  static IndexedFunction constant(QuiverPtr q, const Scalar& c) {
    IndexedFunction f(q);
    for (auto& v : f.values_) v = c;
    return f;
  }

  const QuiverPtr& quiver() const { return q_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  Scalar& operator[](std::size_t i) { return values_[i]; }
  const Scalar& at(const std::string& id) const { return values_[Tag::index(*q_, id)]; }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }
  IndexedFunction conj() const {
    IndexedFunction out(*this);
    for (auto& v : out.values_) v = v.conj();
    return out;
  }

  IndexedFunction& operator+=(const IndexedFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  IndexedFunction& operator-=(const IndexedFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  IndexedFunction& operator*=(const Scalar& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend IndexedFunction operator+(IndexedFunction a, const IndexedFunction& b) { return a += b; }
  friend IndexedFunction operator-(IndexedFunction a, const IndexedFunction& b) { return a -= b; }
  friend IndexedFunction operator*(const Scalar& s, IndexedFunction a) { return a *= s; }
  friend IndexedFunction operator*(IndexedFunction a, const Scalar& s) { return a *= s; }

  friend bool operator==(const IndexedFunction& a, const IndexedFunction& b) {
    return same_quiver(*a.q_, *b.q_) && a.values_ == b.values_;
  }

  void check_same(const IndexedFunction& o) const {
    if (!same_quiver(*q_, *o.q_)) throw InputError("functions indexed by different quivers");
  }
  void check_over(const FiniteQuiver& q) const {
    if (!same_quiver(*q_, q)) throw InputError(std::string(Tag::name) + " indexed by wrong quiver");
  }

 private:
  QuiverPtr q_;
  std::vector<Scalar> values_;
};

struct VertexTag {
  static constexpr const char* name = "vertex function";
  static std::size_t size(const FiniteQuiver& q) { return q.vertex_count(); }
  static std::size_t index(const FiniteQuiver& q, const std::string& id) {
    return q.vertex_index(id);
  }
};

struct EdgeTag {
  static constexpr const char* name = "edge vector";
  static std::size_t size(const FiniteQuiver& q) { return q.edge_count(); }
  static std::size_t index(const FiniteQuiver& q, const std::string& id) {
    return q.edge_index(id);
  }
};

}  // namespace detail

/// Element of A_E: a function on the vertex set.
using VertexFunction = detail::IndexedFunction<detail::VertexTag>;
/// Element of X_E: a function on the edge set.
using EdgeVector = detail::IndexedFunction<detail::EdgeTag>;

}  // namespace tqv

#endif  // TQV_ELEMENTS_HPP_
