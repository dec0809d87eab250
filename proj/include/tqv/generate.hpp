#ifndef TQV_GENERATE_HPP_
#define TQV_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tqv/correspondence.hpp"
#include "tqv/elements.hpp"
#include "tqv/morphism.hpp"
#include "tqv/quiver.hpp"

namespace tqv {

struct QuiverBounds {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 6;
  /// All weights 1 (topological graph with counting measures).
  bool counting = false;
};

/// Random valid quiver: vertices v0.., edges e0.., weights drawn from
/// {1, 2, 1/2, 3, 2/3}. Deterministic per seed.
QuiverPtr gen_quiver(std::uint64_t seed, const QuiverBounds& bounds);

struct CoverBounds {
  /// Number of domain vertices stacked over each codomain vertex: 1..max_cover.
  std::size_t max_cover = 2;
  std::size_t max_dom_vertices = 8;
  std::size_t max_dom_edges = 16;
  std::size_t retry_limit = 1000;
};

/// Regular morphism onto a random codomain (see gen_regular_cover).
QuiverMorphism gen_regular_morphism(std::uint64_t seed, const QuiverBounds& cod_bounds,
                                    const CoverBounds& cover);

/// Regular morphism into the given codomain, built as a cover: each codomain
/// vertex w gets k_w >= 1 domain vertices, each domain vertex over w receives
/// exactly one lifted copy of every edge in r^{-1}(w) with the same weight,
/// and lifted sources are assigned round-robin among the preimages of the
/// original source. Attempts that break (A3) or the size bounds are redrawn.
/// Throws InternalError once retry_limit is exhausted.
QuiverMorphism gen_regular_cover(std::uint64_t seed, const QuiverPtr& cod, const CoverBounds& cover);

/// Gaussian-rational entry with small numerators and denominators.
Scalar gen_scalar(std::uint64_t seed);
EdgeVector gen_edge_vector(std::uint64_t seed, const QuiverPtr& q);
VertexFunction gen_vertex_function(std::uint64_t seed, const QuiverPtr& q);
/// Dense random blocks; about a third of the entries are zero.
FiberBlockOperator gen_operator(std::uint64_t seed, const QuiverPtr& q);

// Controlled single-condition failures derived from a regular morphism.
// Each returns nullopt when the morphism offers no place to apply it.

/// Removes one domain edge: (A2) fails by not covering the target fiber.
std::optional<QuiverMorphism> mutate_drop_edge(const QuiverMorphism& m, std::uint64_t seed);

/// Redirects one edge onto the image of another edge in the same range fiber
/// (keeping both squares): (A2) fails by non-injectivity.
std::optional<QuiverMorphism> mutate_merge_edges(const QuiverMorphism& m, std::uint64_t seed);

/// Adds a fresh sink over a regular codomain vertex together with a full
/// lifted in-fiber: (A2) still holds, (A3) fails at the new vertex.
std::optional<QuiverMorphism> mutate_add_sink(const QuiverMorphism& m, std::uint64_t seed);

}  // namespace tqv

#endif  // TQV_GENERATE_HPP_
