#include "tqv/generate.hpp"

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tqv/error.hpp"

namespace tqv {

namespace {

using Rng = std::mt19937_64;

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational draw_weight(Rng& rng) {
  static const std::array<std::pair<long, long>, 5> pool{{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 3}}};
  auto [p, q] = pool[draw(rng, 0, pool.size() - 1)];
  Rational w(p, q);
  w.canonicalize();
  return w;
}

Scalar draw_scalar(Rng& rng) {
  auto re = Rational(static_cast<long>(draw(rng, 0, 6)) - 3, static_cast<long>(draw(rng, 1, 3)));
  auto im = Rational(static_cast<long>(draw(rng, 0, 4)) - 2, static_cast<long>(draw(rng, 1, 2)));
  re.canonicalize();
  im.canonicalize();
  return Scalar(re, im);
}

std::optional<QuiverMorphism> try_cover(Rng& rng, const QuiverPtr& cod, const CoverBounds& cover) {
  const auto& F = *cod;
  std::vector<std::vector<std::size_t>> over(F.vertex_count());
  std::vector<VertexId> vertices;
  std::vector<std::size_t> vmap;
  for (std::size_t w = 0; w < F.vertex_count(); ++w) {
    auto k = draw(rng, 1, cover.max_cover);
    for (std::size_t i = 0; i < k; ++i) {
      over[w].push_back(vertices.size());
      vertices.push_back(F.vertices()[w] + "." + std::to_string(i));
      vmap.push_back(w);
    }
  }
  if (vertices.size() > cover.max_dom_vertices) return std::nullopt;

  std::vector<EdgeRecord> edges;
  std::vector<std::size_t> emap;
  std::vector<std::size_t> next_source(F.vertex_count(), 0);
  for (std::size_t w = 0; w < F.vertex_count(); ++w) {
    for (auto v : over[w]) {
      for (auto x : F.in_edges(w)) {
        auto u = F.src(x);
        auto s = over[u][next_source[u]++ % over[u].size()];
        edges.push_back({F.edges()[x].id + "@" + vertices[v], vertices[s], vertices[v], F.weight(x)});
        emap.push_back(x);
      }
    }
  }
  if (edges.size() > cover.max_dom_edges) return std::nullopt;

  auto dom = make_quiver(std::move(vertices), std::move(edges));
  if (!dom->is_valid()) return std::nullopt;
  QuiverMorphism m(dom, cod, std::move(vmap), std::move(emap));
  if (!is_regular(m)) return std::nullopt;
  return m;
}

}  // namespace

QuiverPtr gen_quiver(std::uint64_t seed, const QuiverBounds& bounds) {
  if (bounds.max_vertices == 0) throw InputError("quiver bounds must allow at least one vertex");
  Rng rng(seed);
  auto n = draw(rng, 1, bounds.max_vertices);
  auto m = draw(rng, 0, bounds.max_edges);
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < m; ++i) {
    auto s = draw(rng, 0, n - 1);
    auto r = draw(rng, 0, n - 1);
    Rational w = bounds.counting ? Rational(1) : draw_weight(rng);
    edges.push_back({"e" + std::to_string(i), vertices[s], vertices[r], w});
  }
  return make_quiver(std::move(vertices), std::move(edges));
}

QuiverMorphism gen_regular_cover(std::uint64_t seed, const QuiverPtr& cod, const CoverBounds& cover) {
  require_valid(*cod);
  if (cover.max_cover == 0) throw InputError("cover bounds must allow at least one sheet");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < cover.retry_limit; ++attempt) {
    if (auto m = try_cover(rng, cod, cover)) return *m;
  }
  throw InternalError("regular cover generation exceeded its retry limit");
}

QuiverMorphism gen_regular_morphism(std::uint64_t seed, const QuiverBounds& cod_bounds,
                                    const CoverBounds& cover) {
  if (cover.max_cover == 0) throw InputError("cover bounds must allow at least one sheet");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < cover.retry_limit; ++attempt) {
    auto cod = gen_quiver(rng(), cod_bounds);
    if (auto m = try_cover(rng, cod, cover)) return *m;
  }
  throw InternalError("regular morphism generation exceeded its retry limit");
}

Scalar gen_scalar(std::uint64_t seed) {
  Rng rng(seed);
  return draw_scalar(rng);
}

EdgeVector gen_edge_vector(std::uint64_t seed, const QuiverPtr& q) {
  Rng rng(seed);
  EdgeVector xi(q);
  for (std::size_t e = 0; e < xi.size(); ++e) xi[e] = draw_scalar(rng);
  return xi;
}

VertexFunction gen_vertex_function(std::uint64_t seed, const QuiverPtr& q) {
  Rng rng(seed);
  VertexFunction f(q);
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = draw_scalar(rng);
  return f;
}

FiberBlockOperator gen_operator(std::uint64_t seed, const QuiverPtr& q) {
  Rng rng(seed);
  FiberBlockOperator t(q);
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    auto& b = t.block(v);
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (draw(rng, 0, 2) != 0) b(i, j) = draw_scalar(rng);
      }
    }
  }
  return t;
}

std::optional<QuiverMorphism> mutate_drop_edge(const QuiverMorphism& m, std::uint64_t seed) {
  const auto& E = *m.dom();
  if (E.edge_count() == 0) return std::nullopt;
  Rng rng(seed);
  auto drop = draw(rng, 0, E.edge_count() - 1);
  std::vector<EdgeRecord> edges;
  std::vector<std::size_t> emap;
  for (std::size_t e = 0; e < E.edge_count(); ++e) {
    if (e == drop) continue;
    edges.push_back(E.edges()[e]);
    emap.push_back(m.emap(e));
  }
  auto dom = make_quiver(E.vertices(), std::move(edges));
  return QuiverMorphism(dom, m.cod(), m.vertex_map(), std::move(emap));
}

std::optional<QuiverMorphism> mutate_merge_edges(const QuiverMorphism& m, std::uint64_t seed) {
  const auto& E = *m.dom();
  const auto& F = *m.cod();
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t v = 0; v < E.vertex_count(); ++v) {
    for (auto keep : E.in_edges(v)) {
      for (auto moved : E.in_edges(v)) {
        if (keep == moved || m.emap(keep) == m.emap(moved)) continue;
        if (F.src(m.emap(keep)) == m.vmap(E.src(moved))) candidates.emplace_back(keep, moved);
      }
    }
  }
  if (candidates.empty()) return std::nullopt;
  Rng rng(seed);
  auto [keep, moved] = candidates[draw(rng, 0, candidates.size() - 1)];
  auto emap = m.edge_map();
  emap[moved] = m.emap(keep);
  return QuiverMorphism(m.dom(), m.cod(), m.vertex_map(), std::move(emap));
}

std::optional<QuiverMorphism> mutate_add_sink(const QuiverMorphism& m, std::uint64_t seed) {
  const auto& E = *m.dom();
  const auto& F = *m.cod();
  auto cls = classify(F);
  std::vector<std::vector<std::size_t>> over(F.vertex_count());
  for (std::size_t v = 0; v < E.vertex_count(); ++v) over[m.vmap(v)].push_back(v);

  std::vector<std::size_t> candidates;
  for (std::size_t u = 0; u < F.vertex_count(); ++u) {
    if (!cls.regular[u]) continue;
    bool liftable = true;
    for (auto x : F.in_edges(u)) liftable = liftable && !over[F.src(x)].empty();
    if (liftable) candidates.push_back(u);
  }
  if (candidates.empty()) return std::nullopt;
  Rng rng(seed);
  auto u = candidates[draw(rng, 0, candidates.size() - 1)];

  VertexId sink = F.vertices()[u] + ".sink";
  if (E.find_vertex(sink)) return std::nullopt;
  auto vertices = E.vertices();
  vertices.push_back(sink);
  auto vmap = m.vertex_map();
  vmap.push_back(u);
  auto edges = E.edges();
  auto emap = m.edge_map();
  for (auto x : F.in_edges(u)) {
    const auto& preimages = over[F.src(x)];
    auto s = preimages[draw(rng, 0, preimages.size() - 1)];
    edges.push_back({F.edges()[x].id + "@" + sink, E.vertices()[s], sink, F.weight(x)});
    emap.push_back(x);
  }
  auto dom = make_quiver(std::move(vertices), std::move(edges));
  if (!dom->is_valid()) return std::nullopt;
  return QuiverMorphism(dom, m.cod(), std::move(vmap), std::move(emap));
}

}  // namespace tqv
