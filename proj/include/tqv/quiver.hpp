#ifndef TQV_QUIVER_HPP_
#define TQV_QUIVER_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tqv/scalar.hpp"

namespace tqv {

using VertexId = std::string;
using EdgeId = std::string;

struct EdgeRecord {
  EdgeId id;
  VertexId src;
  VertexId rng;
  /// lambda^{rng}({e}); strictly positive on a valid quiver.
  Rational weight;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// A topological quiver over finite discrete vertex and edge spaces.
///
/// The measure family is stored edgewise: each edge carries the mass it gets
/// from the measure attached to its range vertex. Construction never fails;
/// structural problems are reported by validate() and operations that need a
/// valid quiver reject invalid ones with InputError.
class FiniteQuiver {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  FiniteQuiver() = default;
  FiniteQuiver(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const VertexId& id) const;
  std::optional<std::size_t> find_edge(const EdgeId& id) const;
  /// Throws InputError on an unknown id.
  std::size_t vertex_index(const VertexId& id) const;
  std::size_t edge_index(const EdgeId& id) const;

  // Index-level structure maps. Valid only on a valid quiver.
  std::size_t src(std::size_t e) const { return src_[e]; }
  std::size_t rng(std::size_t e) const { return rng_[e]; }
  const Rational& weight(std::size_t e) const { return edges_[e].weight; }
  /// r^{-1}(v) in edge-list order.
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  /// Position of e inside in_edges(rng(e)).
  std::size_t in_position(std::size_t e) const { return in_pos_[e]; }
  /// s^{-1}(v) in edge-list order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

  bool is_valid() const { return valid_; }

  friend bool operator==(const FiniteQuiver& a, const FiniteQuiver& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<VertexId, std::size_t> vertex_lookup_;
  std::unordered_map<EdgeId, std::size_t> edge_lookup_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> rng_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> in_pos_;
  bool valid_ = true;
};

using QuiverPtr = std::shared_ptr<const FiniteQuiver>;

inline QuiverPtr make_quiver(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges) {
  return std::make_shared<const FiniteQuiver>(std::move(vertices), std::move(edges));
}

/// Pointer identity or structural equality.
bool same_quiver(const FiniteQuiver& a, const FiniteQuiver& b);

struct Violation {
  enum class Kind {
    kDuplicateVertex,
    kDuplicateEdge,
    kDanglingSrc,
    kDanglingRng,
    kNonPositiveWeight,
  };
  Kind kind;
  std::string id;

  std::string message() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FiniteQuiver& q);

/// Throws InputError listing the first violation.
void require_valid(const FiniteQuiver& q);

struct VertexClassification {
  std::vector<VertexId> sinks;
  std::vector<VertexId> fin;
  std::vector<VertexId> reg;
  std::vector<VertexId> sing;
  /// regular[i] iff vertices()[i] is in reg.
  std::vector<bool> regular;
};

VertexClassification classify(const FiniteQuiver& q);

std::vector<std::pair<EdgeId, Rational>> in_fiber(const FiniteQuiver& q, const VertexId& v);

}  // namespace tqv

#endif  // TQV_QUIVER_HPP_
