// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tqv/corr_morphism.hpp"
#include "tqv/factor.hpp"
#include "tqv/generate.hpp"
#include "tqv/pimsner.hpp"

using namespace tqv;

namespace {

constexpr double kTimeBudgetSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

std::string seed_tag(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

const QuiverBounds kCod{4, 6, false};
const CoverBounds kCover{2, 8, 16, 1000};

QuiverMorphism regular_sample(std::uint64_t seed) { return gen_regular_morphism(seed, kCod, kCover); }

// Composable pair E -m-> F -n-> G with |E^0| <= 8 and |E^1| <= 16.
std::pair<QuiverMorphism, QuiverMorphism> composable_pair(std::uint64_t seed) {
  auto n = gen_regular_morphism(seed, {2, 4, false}, {2, 4, 8, 1000});
  auto m = gen_regular_cover(seed + 100000, n.dom(), kCover);
  return {n, m};
}

// The first `count` A3-only mutants, scanning seeds upward.
std::vector<QuiverMorphism> a3_mutants(std::size_t count) {
  std::vector<QuiverMorphism> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    if (auto s = mutate_add_sink(regular_sample(seed), seed)) out.push_back(*s);
  }
  return out;
}

Outcome category_closure() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [n, m] = composable_pair(seed);
    auto nm = compose(n, m);
    o.require(m.dom()->vertex_count() <= 8 && m.dom()->edge_count() <= 16, seed_tag("size bound", seed));
    o.require(check_regular(n).ok() && check_regular(m).ok(), seed_tag("inputs not regular", seed));
    o.require(check_regular(nm).ok(), seed_tag("composite not regular", seed));
    o.require(oracle::regular(nm), seed_tag("oracle rejects composite", seed));
  }
  o.detail = "200 composable pairs";
  return o;
}

Outcome correspondence_conditions() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto r = check_covariance(build_corr_morphism(regular_sample(seed)));
    o.require(r.c1.passed(), seed_tag("C1", seed));
    o.require(r.c2.passed(), seed_tag("C2", seed));
  }
  auto mutants = a3_mutants(50);
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    auto reg = check_regular(mutants[i]);
    o.require(reg.a2_ok() && !reg.a3_ok(), "mutant " + std::to_string(i) + " is not A3-only");
    auto r = check_covariance(build_corr_morphism(mutants[i]));
    o.require(r.c1.passed() && r.c2.passed(), "C1/C2 on A3-only mutant " + std::to_string(i));
  }
  o.detail = "200 regular, 50 A3-only mutants";
  return o;
}

Outcome covariance() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto r = check_covariance(build_corr_morphism(regular_sample(seed)));
    o.require(r.c3.passed(), seed_tag("C3", seed));
    o.require(r.c4.passed() && r.c4_reduction_route && r.c4_operator_route, seed_tag("C4", seed));
  }
  for (const auto& s : a3_mutants(50)) {
    auto r = check_covariance(build_corr_morphism(s));
    o.require(!r.c3.passed() && !r.c3.witnesses.empty(), "C3 accepted an A3-only mutant");
  }
  o.detail = "200 regular (both C4 routes), 50 C3 witnesses";
  return o;
}

Outcome rank_one_intertwining() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = regular_sample(seed);
    auto cm = build_corr_morphism(m);
    for (std::uint64_t k = 0; k < 5; ++k) {
      auto g = gen_edge_vector(seed * 5 + k, m.cod());
      o.require(c4lemma_check(cm, g), seed_tag("lemma", seed));
      o.require(oracle::mu1_super(m, sigma(g)) == sigma(cm.mu1(g)), seed_tag("oracle", seed));
    }
  }
  o.detail = "200 morphisms x 5 g";
  return o;
}

Outcome factor_equivalence() {
  Outcome o;
  int regular = 0, a2_broken = 0, a3_broken = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto base = gen_regular_morphism(seed, {4, 6, true}, kCover);
    std::optional<QuiverMorphism> pick;
    switch (seed % 4) {
      case 1: pick = mutate_drop_edge(base, seed); break;
      case 2: pick = mutate_merge_edges(base, seed); break;
      case 3: pick = mutate_add_sink(base, seed); break;
      default: break;
    }
    const auto& m = pick ? *pick : base;
    auto f = check_factor_map(m);
    auto r = check_regular(m);
    regular += r.ok();
    a2_broken += !r.a2_ok();
    a3_broken += r.a2_ok() && !r.a3_ok();
    o.require(f.ok() == r.ok(), seed_tag("verdict", seed));
    o.require(f.f2_ok() == r.a2_ok(), seed_tag("F2 vs A2", seed));
    o.require(f.regular_ok() == r.a3_ok(), seed_tag("regular factor vs A3", seed));
    o.require(equivalence_check(m), seed_tag("equivalence_check", seed));
  }
  o.require(regular > 0 && a2_broken > 0 && a3_broken > 0, "sample mix lacks a category");
  std::ostringstream os;
  os << "200 counting morphisms: " << regular << " regular, " << a2_broken << " A2-broken, " << a3_broken
     << " A3-broken";
  o.detail = os.str();
  return o;
}

Deg2Element sum_of_p(const QuiverPtr& q) {
  Deg2Element out(q);
  for (std::size_t v = 0; v < q->vertex_count(); ++v) out += Deg2Element::P(q, v);
  return out;
}

Outcome main_theorem() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = regular_sample(seed);
    auto report = verify_induced(m);
    o.require(report.ok(), seed_tag("verify_induced", seed));
    auto g = induced_map(m);
    for (std::size_t w = 0; w < m.cod()->vertex_count(); ++w)
      o.require(has_degree(g.p_image(w), 0), seed_tag("p image degree", seed));
    for (std::size_t x = 0; x < m.cod()->edge_count(); ++x)
      o.require(has_degree(g.t_image(x), 1), seed_tag("t image degree", seed));
    o.require(g.apply(sum_of_p(m.cod())) == sum_of_p(m.dom()), seed_tag("unitality", seed));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [n, m] = composable_pair(seed);
    o.require(induced_map(compose(n, m)) == compose(induced_map(m), induced_map(n)),
              seed_tag("functoriality", seed));
  }
  o.detail = "200 morphisms, 200 composable pairs";
  return o;
}

// Column decomposition T = sum_y theta(T delta_y, delta_y / weight(y)), then
// each pair split in two with random scalars and the list shuffled.
std::vector<RankOnePair> regrouped(const FiberBlockOperator& t, std::uint64_t seed) {
  const auto& q = t.quiver();
  std::mt19937_64 rng(seed);
  std::vector<RankOnePair> out;
  for (std::size_t y = 0; y < q->edge_count(); ++y) {
    auto dy = EdgeVector::delta(q, q->edges()[y].id);
    auto xi = t.apply(dy);
    auto eta = Scalar(Rational(1) / q->weight(y)) * dy;
    Scalar c(fixtures::w(static_cast<long>(rng() % 7) + 1, 3), fixtures::w(static_cast<long>(rng() % 5) - 2));
    Scalar s(fixtures::w(static_cast<long>(rng() % 4) + 1, 2), Rational(1));
    // theta(a s, b / conj(s)) = theta(a, b).
    out.emplace_back(c * xi * s, eta * s.conj().inverse());
    out.emplace_back((Scalar(1) - c) * xi, eta);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

Outcome oracle_equivalences() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto q = gen_quiver(seed, {6, 9, false});
    auto jx = ideal_JX(*q);
    o.require(std::set<VertexId>(jx.begin(), jx.end()) == oracle::ideal_from_kernel(q), seed_tag("J_X", seed));
  }
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = regular_sample(seed);
    for (auto c : {std::optional<QuiverMorphism>(m), mutate_drop_edge(m, seed), mutate_merge_edges(m, seed),
                   mutate_add_sink(m, seed)}) {
      if (!c) continue;
      auto r = check_regular(*c);
      for (const auto& v : c->dom()->vertices()) {
        o.require(r.a2_ok_at(v) == oracle::a2_by_pushforward(*c, v), seed_tag("pushforward vs A2", seed));
      }
      ++checked;
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto q = gen_quiver(seed + 5000, {5, 9, false});
    auto t = gen_operator(seed, q);
    o.require(sum_of_thetas(q, rank_one_decompose(t)) == t, seed_tag("rank-one reconstruction", seed));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto m = regular_sample(seed + 9000);
    auto cm = build_corr_morphism(m);
    auto t = gen_operator(seed, m.cod());
    auto alt = regrouped(t, seed);
    o.require(sum_of_thetas(m.cod(), alt) == t, seed_tag("regrouping changed T", seed));
    auto direct = mu1_super(cm, t);
    o.require(mu1_super(cm, alt) == direct, seed_tag("decomposition dependence", seed));
    o.require(oracle::mu1_super(m, t) == direct, seed_tag("mu1_super oracle", seed));
  }
  o.detail = "100 J_X, pushforward on " + std::to_string(checked) + " morphisms, 100 operators, 50 regroupings";
  return o;
}

Outcome fixture_regressions() {
  Outcome o;
  using W = Word;
  Letter t0{Generator::kT, 0}, t0s{Generator::kT, 0, true};

  auto loop = fixtures::q_loop();
  Deg2Engine le(loop);
  auto lp = Deg2Element::P(loop, 0);
  auto pres = emit_presentation(loop);
  auto text = to_string(pres);
  o.require(text.find("t_ℓ* t_ℓ = p_u\n") != std::string::npos, "Q_LOOP: t*t = p missing");
  o.require(text.find("p_u = t_ℓ t_ℓ*\n") != std::string::npos, "Q_LOOP: p = tt* missing");
  o.require(le.equal(deg2_reduce(loop, W{t0s, t0}), lp), "Q_LOOP: t*t != p");
  o.require(le.equal(deg2_reduce(loop, W{t0, t0s}), lp), "Q_LOOP: tt* != p");
  for (const auto& r : pres.relations)
    o.require(le.equal(deg2_reduce(loop, r.lhs), deg2_reduce(loop, r.rhs)), "Q_LOOP relation " + r.tag);

  auto wloop = fixtures::q_wloop();
  Deg2Engine we(wloop);
  auto wp = Deg2Element::P(wloop, 0);
  auto wtext = to_string(emit_presentation(wloop));
  o.require(wtext.find("t_ℓ* t_ℓ = 2 p_u\n") != std::string::npos, "Q_WLOOP: t*t = 2p missing");
  o.require(wtext.find("p_u = (1/2) t_ℓ t_ℓ*\n") != std::string::npos, "Q_WLOOP: p = (1/2)tt* missing");
  o.require(deg2_reduce(wloop, W{t0s, t0}) == Scalar(2) * wp, "Q_WLOOP: t*t != 2p");
  o.require(we.equal(wp, Scalar(Rational(1, 2)) * deg2_reduce(wloop, W{t0, t0s})), "Q_WLOOP: p != (1/2)tt*");
  o.require(!we.equal(wp, deg2_reduce(wloop, W{t0, t0s})), "Q_WLOOP: p == tt* should fail");

  auto m = fixtures::m_collapse();
  auto g = induced_map(m);
  auto dom = m.dom();
  o.require(g.p_image(0) == Deg2Element::P(dom, 0) + Deg2Element::P(dom, 1), "M_COLLAPSE: p_u image");
  o.require(g.t_image(0) == Deg2Element::T(dom, 0) + Deg2Element::T(dom, 1), "M_COLLAPSE: t_l image");
  o.require(verify_induced(m).ok(), "M_COLLAPSE: verify_induced");
  o.detail = "Q_LOOP, Q_WLOOP, M_COLLAPSE";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"category closure", category_closure},
      {"correspondence conditions C1/C2", correspondence_conditions},
      {"covariance C3/C4", covariance},
      {"rank-one intertwining", rank_one_intertwining},
      {"factor-map equivalence", factor_equivalence},
      {"induced homomorphism (relations, functoriality, grading, unitality)", main_theorem},
      {"oracle equivalences", oracle_equivalences},
      {"fixture regressions", fixture_regressions},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < kTimeBudgetSeconds, "over the time budget");
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << ": " << o.detail
              << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s)\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
