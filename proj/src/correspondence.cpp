#include "tqv/correspondence.hpp"

#include <algorithm>
#include <cmath>

#include "tqv/error.hpp"

namespace tqv {

namespace {

std::vector<Matrix> zero_blocks(const FiniteQuiver& q) {
  std::vector<Matrix> blocks;
  blocks.reserve(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    auto k = q.in_edges(v).size();
    blocks.emplace_back(k, k);
  }
  return blocks;
}

}  // namespace

FiberBlockOperator::FiberBlockOperator(QuiverPtr q) : q_(std::move(q)) {
  require_valid(*q_);
  blocks_ = zero_blocks(*q_);
}

FiberBlockOperator::FiberBlockOperator(QuiverPtr q, std::vector<Matrix> blocks)
    : q_(std::move(q)), blocks_(std::move(blocks)) {
  require_valid(*q_);
  if (blocks_.size() != q_->vertex_count()) throw InputError("one block per vertex expected");
  for (std::size_t v = 0; v < blocks_.size(); ++v) {
    auto k = q_->in_edges(v).size();
    if (blocks_[v].rows() != k || blocks_[v].cols() != k) {
      throw InputError("block shape does not match fiber of " + q_->vertices()[v]);
    }
  }
}

FiberBlockOperator FiberBlockOperator::identity(QuiverPtr q) {
  FiberBlockOperator t(std::move(q));
  for (auto& b : t.blocks_) b = Matrix::identity(b.rows());
  return t;
}

Scalar FiberBlockOperator::entry(std::size_t x, std::size_t y) const {
  auto v = q_->rng(x);
  if (q_->rng(y) != v) return Scalar();
  return blocks_[v](q_->in_position(x), q_->in_position(y));
}

EdgeVector FiberBlockOperator::apply(const EdgeVector& zeta) const {
  zeta.check_over(*q_);
  EdgeVector out(q_);
  for (std::size_t v = 0; v < q_->vertex_count(); ++v) {
    const auto& fiber = q_->in_edges(v);
    const auto& b = blocks_[v];
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < fiber.size(); ++j) acc += b(i, j) * zeta[fiber[j]];
      out[fiber[i]] = acc;
    }
  }
  return out;
}

FiberBlockOperator FiberBlockOperator::adjoint() const {
  FiberBlockOperator out(q_);
  for (std::size_t v = 0; v < q_->vertex_count(); ++v) {
    const auto& fiber = q_->in_edges(v);
    const auto& b = blocks_[v];
    auto& a = out.blocks_[v];
    // (W^{-1} B^dagger W)[i][j] = conj(B[j][i]) w_j / w_i
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      for (std::size_t j = 0; j < fiber.size(); ++j) {
        a(i, j) = b(j, i).conj() * Scalar(Rational(q_->weight(fiber[j]) / q_->weight(fiber[i])));
      }
    }
  }
  return out;
}

bool FiberBlockOperator::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
}

void FiberBlockOperator::check_same(const FiberBlockOperator& o) const {
  if (!same_quiver(*q_, *o.q_)) throw InputError("operators act on different quivers");
}

FiberBlockOperator& FiberBlockOperator::operator+=(const FiberBlockOperator& o) {
  check_same(o);
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks_[v] += o.blocks_[v];
  return *this;
}

FiberBlockOperator& FiberBlockOperator::operator-=(const FiberBlockOperator& o) {
  check_same(o);
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks_[v] -= o.blocks_[v];
  return *this;
}

FiberBlockOperator& FiberBlockOperator::operator*=(const Scalar& s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

FiberBlockOperator operator*(const FiberBlockOperator& a, const FiberBlockOperator& b) {
  a.check_same(b);
  FiberBlockOperator out(a.q_);
  for (std::size_t v = 0; v < a.blocks_.size(); ++v) out.blocks_[v] = a.blocks_[v] * b.blocks_[v];
  return out;
}

FiberBlockOperator adjoint(const FiberBlockOperator& t) { return t.adjoint(); }

VertexFunction inner_product(const EdgeVector& xi, const EdgeVector& eta) {
  xi.check_same(eta);
  const auto& q = *xi.quiver();
  VertexFunction out(xi.quiver());
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    out[q.rng(e)] += xi[e].conj() * eta[e] * Scalar(q.weight(e));
  }
  return out;
}

EdgeVector left_action(const VertexFunction& f, const EdgeVector& xi) {
  f.check_over(*xi.quiver());
  const auto& q = *xi.quiver();
  EdgeVector out(xi.quiver());
  for (std::size_t e = 0; e < q.edge_count(); ++e) out[e] = f[q.src(e)] * xi[e];
  return out;
}

EdgeVector right_action(const EdgeVector& xi, const VertexFunction& f) {
  f.check_over(*xi.quiver());
  const auto& q = *xi.quiver();
  EdgeVector out(xi.quiver());
  for (std::size_t e = 0; e < q.edge_count(); ++e) out[e] = xi[e] * f[q.rng(e)];
  return out;
}

ModuleActions module_actions(const VertexFunction& f, const EdgeVector& xi) {
  return {left_action(f, xi), right_action(xi, f)};
}

Rational norm_squared(const EdgeVector& xi) {
  auto ip = inner_product(xi, xi);
  Rational best = 0;
  for (const auto& s : ip.values()) {
    if (s.re() > best) best = s.re();
  }
  return best;
}

double norm(const EdgeVector& xi) { return std::sqrt(norm_squared(xi).get_d()); }

FiberBlockOperator theta(const EdgeVector& xi, const EdgeVector& eta) {
  xi.check_same(eta);
  const auto& q = *xi.quiver();
  FiberBlockOperator out(xi.quiver());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto& fiber = q.in_edges(v);
    auto& b = out.block(v);
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      if (xi[fiber[i]].is_zero()) continue;
      for (std::size_t j = 0; j < fiber.size(); ++j) {
        b(i, j) = xi[fiber[i]] * eta[fiber[j]].conj() * Scalar(q.weight(fiber[j]));
      }
    }
  }
  return out;
}

FiberBlockOperator sigma(const EdgeVector& g) {
  const auto& q = *g.quiver();
  FiberBlockOperator out(g.quiver());
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    auto i = q.in_position(e);
    out.block(q.rng(e))(i, i) = g[e];
  }
  return out;
}

FiberBlockOperator phi(const VertexFunction& f) {
  const auto& q = *f.quiver();
  EdgeVector g(f.quiver());
  for (std::size_t e = 0; e < q.edge_count(); ++e) g[e] = f[q.src(e)];
  return sigma(g);
}

std::vector<RankOnePair> rank_one_decompose(const FiberBlockOperator& t) {
  const auto& qp = t.quiver();
  const auto& q = *qp;
  std::vector<RankOnePair> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto& fiber = q.in_edges(v);
    const auto& b = t.block(v);
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      for (std::size_t j = 0; j < fiber.size(); ++j) {
        if (b(i, j).is_zero()) continue;
        EdgeVector xi(qp);
        xi[fiber[i]] = b(i, j);
        EdgeVector eta(qp);
        eta[fiber[j]] = Scalar(Rational(1 / q.weight(fiber[j])));
        out.emplace_back(std::move(xi), std::move(eta));
      }
    }
  }
  return out;
}

FiberBlockOperator sum_of_thetas(const QuiverPtr& q, const std::vector<RankOnePair>& pairs) {
  FiberBlockOperator out(q);
  for (const auto& [xi, eta] : pairs) out += theta(xi, eta);
  return out;
}

std::vector<VertexId> ideal_JX(const FiniteQuiver& q) { return classify(q).reg; }

}  // namespace tqv
