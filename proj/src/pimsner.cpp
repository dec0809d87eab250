#include "tqv/pimsner.hpp"

#include <optional>
#include <sstream>

#include "tqv/error.hpp"

namespace tqv {

namespace {

struct Product {
  Scalar coeff;
  BasisKey key;
};

Product unit(BasisKey k) { return {Scalar(1), k}; }

// Product of two basis elements under R1-R4 and R2. nullopt means zero.
std::optional<Product> multiply(const FiniteQuiver& q, const BasisKey& a, const BasisKey& b) {
  using K = BasisKind;
  switch (a.kind) {
    case K::kP:
      switch (b.kind) {
        case K::kP:
          if (a.i == b.i) return unit(a);
          return std::nullopt;
        case K::kT:
        case K::kTT:
          if (a.i == q.src(b.i)) return unit(b);
          return std::nullopt;
        case K::kTStar:
          if (a.i == q.rng(b.i)) return unit(b);
          return std::nullopt;
      }
      break;
    case K::kT:
      switch (b.kind) {
        case K::kP:
          if (b.i == q.rng(a.i)) return unit(a);
          return std::nullopt;
        case K::kT:
        case K::kTT:
          // t_e t_f = t_e p_{rng e} p_{src f} t_f
          if (q.rng(a.i) != q.src(b.i)) return std::nullopt;
          throw FragmentError();
        case K::kTStar:
          if (q.rng(a.i) == q.rng(b.i)) return unit({K::kTT, a.i, b.i});
          return std::nullopt;
      }
      break;
    case K::kTStar:
      switch (b.kind) {
        case K::kP:
          if (b.i == q.src(a.i)) return unit(a);
          return std::nullopt;
        case K::kT:
          if (a.i == b.i) return Product{Scalar(q.weight(a.i)), {K::kP, q.rng(a.i)}};
          return std::nullopt;
        case K::kTStar:
          // t_e* t_f* = (t_f t_e)*
          if (q.rng(b.i) != q.src(a.i)) return std::nullopt;
          throw FragmentError();
        case K::kTT:
          if (a.i == b.i) return Product{Scalar(q.weight(a.i)), {K::kTStar, b.j}};
          return std::nullopt;
      }
      break;
    case K::kTT:
      switch (b.kind) {
        case K::kP:
          if (b.i == q.src(a.j)) return unit(a);
          return std::nullopt;
        case K::kT:
          if (a.j == b.i) return Product{Scalar(q.weight(a.j)), {K::kT, a.i}};
          return std::nullopt;
        case K::kTStar:
          if (q.rng(b.i) != q.src(a.j)) return std::nullopt;
          throw FragmentError();
        case K::kTT:
          if (a.j == b.i) return Product{Scalar(q.weight(a.j)), {K::kTT, a.i, b.j}};
          return std::nullopt;
      }
      break;
  }
  throw InternalError("unhandled basis product");
}

std::string coeff_prefix(const Scalar& c) {
  if (c == Scalar(1)) return "";
  if (c.is_real() && c.re().get_den() == 1) return c.re().get_str() + " ";
  return "(" + pretty_scalar(c) + ") ";
}

// Appends "c body" to out with the appropriate joiner.
void append_term(std::string& out, bool first, const Scalar& c, const std::string& body) {
  bool negative = c.is_real() && sgn(c.re()) < 0;
  Scalar mag = negative ? -c : c;
  if (first) {
    out += negative ? "-" : "";
  } else {
    out += negative ? " - " : " + ";
  }
  out += coeff_prefix(mag) + body;
}

std::string p_name(const FiniteQuiver& q, std::size_t v) { return "p_" + q.vertices()[v]; }
std::string t_name(const FiniteQuiver& q, std::size_t e) { return "t_" + q.edges()[e].id; }

std::string key_name(const FiniteQuiver& q, const BasisKey& k) {
  switch (k.kind) {
    case BasisKind::kP:
      return p_name(q, k.i);
    case BasisKind::kT:
      return t_name(q, k.i);
    case BasisKind::kTStar:
      return t_name(q, k.i) + "*";
    case BasisKind::kTT:
      return t_name(q, k.i) + " " + t_name(q, k.j) + "*";
  }
  return "?";
}

std::string letter_name(const FiniteQuiver& q, const Letter& l) {
  std::string s = l.gen == Generator::kP ? p_name(q, l.index) : t_name(q, l.index);
  return l.star ? s + "*" : s;
}

Letter p(std::size_t v, bool star = false) { return {Generator::kP, v, star}; }
Letter t(std::size_t e, bool star = false) { return {Generator::kT, e, star}; }

Deg2Element letter_element(const QuiverPtr& q, const Letter& l) {
  if (l.gen == Generator::kP) {
    if (l.index >= q->vertex_count()) throw InputError("unknown projection generator");
    return Deg2Element::P(q, l.index);
  }
  if (l.index >= q->edge_count()) throw InputError("unknown partial isometry generator");
  return l.star ? Deg2Element::TStar(q, l.index) : Deg2Element::T(q, l.index);
}

}  // namespace

int degree(BasisKind kind) {
  switch (kind) {
    case BasisKind::kT:
      return 1;
    case BasisKind::kTStar:
      return -1;
    case BasisKind::kP:
    case BasisKind::kTT:
      return 0;
  }
  return 0;
}

Deg2Element Deg2Element::P(const QuiverPtr& q, std::size_t v) {
  Deg2Element x(q);
  x.add({BasisKind::kP, v}, Scalar(1));
  return x;
}

Deg2Element Deg2Element::T(const QuiverPtr& q, std::size_t e) {
  Deg2Element x(q);
  x.add({BasisKind::kT, e}, Scalar(1));
  return x;
}

Deg2Element Deg2Element::TStar(const QuiverPtr& q, std::size_t e) {
  Deg2Element x(q);
  x.add({BasisKind::kTStar, e}, Scalar(1));
  return x;
}

Deg2Element Deg2Element::TT(const QuiverPtr& q, std::size_t e, std::size_t f) {
  Deg2Element x(q);
  if (q->rng(e) == q->rng(f)) x.add({BasisKind::kTT, e, f}, Scalar(1));
  return x;
}

Scalar Deg2Element::coeff(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void Deg2Element::add(const BasisKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Deg2Element Deg2Element::adjoint() const {
  Deg2Element out(q_);
  for (const auto& [k, c] : terms_) {
    switch (k.kind) {
      case BasisKind::kP:
        out.add(k, c.conj());
        break;
      case BasisKind::kT:
        out.add({BasisKind::kTStar, k.i}, c.conj());
        break;
      case BasisKind::kTStar:
        out.add({BasisKind::kT, k.i}, c.conj());
        break;
      case BasisKind::kTT:
        out.add({BasisKind::kTT, k.j, k.i}, c.conj());
        break;
    }
  }
  return out;
}

void Deg2Element::check_same(const Deg2Element& o) const {
  if (!same_quiver(*q_, *o.q_)) throw InputError("fragment elements over different quivers");
}

Deg2Element& Deg2Element::operator+=(const Deg2Element& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Deg2Element& Deg2Element::operator-=(const Deg2Element& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Deg2Element& Deg2Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Deg2Element operator*(const Deg2Element& a, const Deg2Element& b) {
  a.check_same(b);
  Deg2Element out(a.q_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (auto prod = multiply(*a.q_, ka, kb)) out.add(prod->key, ca * cb * prod->coeff);
    }
  }
  return out;
}

std::string to_string(const Deg2Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    append_term(out, first, c, key_name(*x.quiver(), k));
    first = false;
  }
  return out;
}

Grading grading(const Deg2Element& x) {
  if (x.is_zero()) return {GradingKind::kZero};
  std::optional<int> d;
  for (const auto& [k, c] : x.terms()) {
    int dk = degree(k.kind);
    if (d && *d != dk) return {GradingKind::kMixed};
    d = dk;
  }
  return {GradingKind::kHomogeneous, *d};
}

bool has_degree(const Deg2Element& x, int d) {
  auto g = grading(x);
  return g.kind == GradingKind::kZero || (g.kind == GradingKind::kHomogeneous && g.degree == d);
}

Deg2Element deg2_reduce(const QuiverPtr& q, const Word& word) {
  if (word.empty()) throw InputError("empty word (the unit is not in the fragment)");
  Deg2Element acc = letter_element(q, word.front());
  for (std::size_t i = 1; i < word.size(); ++i) acc = acc * letter_element(q, word[i]);
  return acc;
}

Deg2Element deg2_reduce(const QuiverPtr& q, const Expression& expr) {
  Deg2Element out(q);
  for (const auto& term : expr) out += term.coeff * deg2_reduce(q, term.word);
  return out;
}

Presentation emit_presentation(const QuiverPtr& qp) {
  require_valid(*qp);
  const auto& q = *qp;
  Presentation pres{qp, {}};
  auto& rel = pres.relations;
  const auto V = q.vertex_count();
  const auto E = q.edge_count();

  for (std::size_t v = 0; v < V; ++v) {
    for (std::size_t w = 0; w < V; ++w) {
      Expression rhs;
      if (v == w) rhs.push_back({Scalar(1), {p(v)}});
      rel.push_back({"R1", {{Scalar(1), {p(v), p(w)}}}, rhs});
    }
  }
  for (std::size_t v = 0; v < V; ++v) {
    rel.push_back({"R1", {{Scalar(1), {p(v, true)}}}, {{Scalar(1), {p(v)}}}});
  }
  for (std::size_t e = 0; e < E; ++e) {
    for (std::size_t f = 0; f < E; ++f) {
      Expression rhs;
      if (e == f) rhs.push_back({Scalar(q.weight(e)), {p(q.rng(e))}});
      rel.push_back({"R2", {{Scalar(1), {t(e, true), t(f)}}}, rhs});
    }
  }
  for (std::size_t v = 0; v < V; ++v) {
    for (std::size_t e = 0; e < E; ++e) {
      Expression rhs;
      if (v == q.src(e)) rhs.push_back({Scalar(1), {t(e)}});
      rel.push_back({"R3", {{Scalar(1), {p(v), t(e)}}}, rhs});
    }
  }
  for (std::size_t e = 0; e < E; ++e) {
    for (std::size_t v = 0; v < V; ++v) {
      Expression rhs;
      if (v == q.rng(e)) rhs.push_back({Scalar(1), {t(e)}});
      rel.push_back({"R4", {{Scalar(1), {t(e), p(v)}}}, rhs});
    }
  }
  auto cls = classify(q);
  for (std::size_t v = 0; v < V; ++v) {
    if (!cls.regular[v]) continue;
    Expression rhs;
    for (auto e : q.out_edges(v)) {
      rhs.push_back({Scalar(Rational(1 / q.weight(e))), {t(e), t(e, true)}});
    }
    rel.push_back({"R5", {{Scalar(1), {p(v)}}}, rhs});
  }
  return pres;
}

std::string to_string(const FiniteQuiver& q, const Expression& expr) {
  if (expr.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : expr) {
    std::string body;
    for (std::size_t i = 0; i < term.word.size(); ++i) {
      if (i) body += " ";
      body += letter_name(q, term.word[i]);
    }
    append_term(out, first, term.coeff, body);
    first = false;
  }
  return out;
}

std::string to_string(const FiniteQuiver& q, const Relation& r) {
  return to_string(q, r.lhs) + " = " + to_string(q, r.rhs);
}

std::string to_string(const Presentation& pres) {
  std::string out;
  for (const auto& r : pres.relations) out += to_string(*pres.quiver, r) + "\n";
  return out;
}

namespace {

std::map<BasisKey, std::size_t> enumerate_basis(const FiniteQuiver& q) {
  std::map<BasisKey, std::size_t> keys;
  auto push = [&](BasisKey k) { keys.emplace(k, keys.size()); };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) push({BasisKind::kP, v});
  for (std::size_t e = 0; e < q.edge_count(); ++e) push({BasisKind::kT, e});
  for (std::size_t e = 0; e < q.edge_count(); ++e) push({BasisKind::kTStar, e});
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    for (auto f : q.in_edges(q.rng(e))) push({BasisKind::kTT, e, f});
  }
  return keys;
}

std::vector<std::vector<Scalar>> covariance_vectors(const FiniteQuiver& q,
                                                    const std::map<BasisKey, std::size_t>& keys) {
  std::vector<std::vector<Scalar>> vecs;
  auto cls = classify(q);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (!cls.regular[v]) continue;
    std::vector<Scalar> r(keys.size());
    r[keys.at({BasisKind::kP, v})] = Scalar(1);
    for (auto e : q.out_edges(v)) {
      r[keys.at({BasisKind::kTT, e, e})] -= Scalar(Rational(1 / q.weight(e)));
    }
    vecs.push_back(std::move(r));
  }
  return vecs;
}

}  // namespace

Deg2Engine::Deg2Engine(QuiverPtr q)
    : q_((require_valid(*q), std::move(q))),
      keys_(enumerate_basis(*q_)),
      span_(keys_.size(), covariance_vectors(*q_, keys_)) {}

std::vector<Scalar> Deg2Engine::coordinates(const Deg2Element& x) const {
  if (!same_quiver(*x.quiver(), *q_)) throw InputError("element is over a different quiver");
  std::vector<Scalar> out(keys_.size());
  for (const auto& [k, c] : x.terms()) {
    auto it = keys_.find(k);
    if (it == keys_.end()) throw InternalError("basis key outside the fragment");
    out[it->second] = c;
  }
  return out;
}

bool Deg2Engine::equal(const Deg2Element& x, const Deg2Element& y) const {
  return span_.contains(coordinates(x - y));
}

bool deg2_equal(const QuiverPtr& q, const Deg2Element& x, const Deg2Element& y) {
  return Deg2Engine(q).equal(x, y);
}

GeneratorMap::GeneratorMap(QuiverPtr source, QuiverPtr target, std::vector<Deg2Element> p_images,
                           std::vector<Deg2Element> t_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      p_images_(std::move(p_images)),
      t_images_(std::move(t_images)) {
  if (p_images_.size() != source_->vertex_count() || t_images_.size() != source_->edge_count()) {
    throw InputError("generator map must assign every generator");
  }
  for (const auto& x : p_images_) {
    if (!same_quiver(*x.quiver(), *target_)) throw InputError("image over the wrong quiver");
  }
  for (const auto& x : t_images_) {
    if (!same_quiver(*x.quiver(), *target_)) throw InputError("image over the wrong quiver");
  }
}

Deg2Element GeneratorMap::image(const Letter& l) const {
  if (l.gen == Generator::kP) return p_images_.at(l.index);
  const auto& x = t_images_.at(l.index);
  return l.star ? x.adjoint() : x;
}

Deg2Element GeneratorMap::apply(const Deg2Element& x) const {
  if (!same_quiver(*x.quiver(), *source_)) throw InputError("element is not over the source");
  Deg2Element out(target_);
  for (const auto& [k, c] : x.terms()) {
    switch (k.kind) {
      case BasisKind::kP:
        out += c * p_images_[k.i];
        break;
      case BasisKind::kT:
        out += c * t_images_[k.i];
        break;
      case BasisKind::kTStar:
        out += c * t_images_[k.i].adjoint();
        break;
      case BasisKind::kTT:
        out += c * (t_images_[k.i] * t_images_[k.j].adjoint());
        break;
    }
  }
  return out;
}

Deg2Element GeneratorMap::apply(const Expression& expr) const {
  Deg2Element out(target_);
  for (const auto& term : expr) {
    if (term.word.empty()) throw InputError("empty word");
    Deg2Element acc = image(term.word.front());
    for (std::size_t i = 1; i < term.word.size(); ++i) acc = acc * image(term.word[i]);
    out += term.coeff * acc;
  }
  return out;
}

GeneratorMap compose(const GeneratorMap& after, const GeneratorMap& before) {
  if (!same_quiver(*before.target(), *after.source())) {
    throw InputError("generator maps are not composable");
  }
  const auto& src = *before.source();
  std::vector<Deg2Element> ps;
  std::vector<Deg2Element> ts;
  for (std::size_t w = 0; w < src.vertex_count(); ++w) ps.push_back(after.apply(before.p_image(w)));
  for (std::size_t x = 0; x < src.edge_count(); ++x) ts.push_back(after.apply(before.t_image(x)));
  return GeneratorMap(before.source(), after.target(), std::move(ps), std::move(ts));
}

GeneratorMap induced_map(const QuiverMorphism& m) {
  auto report = check_regular(m);
  if (!report.ok()) throw InputError("induced homomorphism requires a regular morphism");
  const auto& dom = *m.dom();
  const auto& cod = *m.cod();
  std::vector<Deg2Element> ps(cod.vertex_count(), Deg2Element(m.dom()));
  std::vector<Deg2Element> ts(cod.edge_count(), Deg2Element(m.dom()));
  for (std::size_t v = 0; v < dom.vertex_count(); ++v) ps[m.vmap(v)] += Deg2Element::P(m.dom(), v);
  for (std::size_t e = 0; e < dom.edge_count(); ++e) ts[m.emap(e)] += Deg2Element::T(m.dom(), e);
  return GeneratorMap(m.cod(), m.dom(), std::move(ps), std::move(ts));
}

std::string to_string(const GeneratorMap& g) {
  const auto& src = *g.source();
  std::ostringstream os;
  for (std::size_t w = 0; w < src.vertex_count(); ++w) {
    os << p_name(src, w) << " -> " << to_string(g.p_image(w)) << "\n";
  }
  for (std::size_t x = 0; x < src.edge_count(); ++x) {
    os << t_name(src, x) << " -> " << to_string(g.t_image(x)) << "\n";
  }
  return os.str();
}

bool VerificationReport::ok() const {
  for (const auto& e : entries) {
    if (!e.passed) return false;
  }
  return true;
}

VerificationReport verify_induced(const QuiverMorphism& m) {
  auto map = induced_map(m);
  auto pres = emit_presentation(m.cod());
  Deg2Engine engine(m.dom());
  VerificationReport report;
  for (const auto& r : pres.relations) {
    VerificationReport::Entry entry{r.tag, to_string(*m.cod(), r), false, {}};
    try {
      entry.passed = engine.equal(map.apply(r.lhs), map.apply(r.rhs));
    } catch (const FragmentError& err) {
      entry.passed = false;
      entry.error = std::string("internal error: ") + err.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace tqv
