#include "tqv/cli.hpp"

#include <cstdint>
#include <ostream>

#include <CLI11.hpp>

#include "tqv/corr_morphism.hpp"
#include "tqv/error.hpp"
#include "tqv/factor.hpp"
#include "tqv/generate.hpp"
#include "tqv/io.hpp"
#include "tqv/morphism.hpp"
#include "tqv/pimsner.hpp"
#include "tqv/quiver.hpp"

namespace tqv::cli {

namespace {

struct Options {
  std::string format = "human";
  std::string input;
  std::string second;
  std::uint64_t seed = 0;
  std::size_t max_vertices = 4;
  std::size_t max_edges = 6;
  std::size_t max_cover = 2;
  std::size_t samples = 0;
  bool counting = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  bool structured() const { return opt_.format == "structured"; }

  int emit(const json& j, bool ok) {
    out_ << j.dump(2) << "\n";
    return ok ? kOk : kCheckFailed;
  }

  int validate_cmd() {
    auto q = load_quiver(opt_.input);
    auto r = validate(*q);
    if (structured()) return emit(to_json(r), r.ok());
    if (r.ok()) out_ << "valid\n";
    for (const auto& v : r.violations) out_ << "violation: " << v.message() << "\n";
    return r.ok() ? kOk : kCheckFailed;
  }

  int classify_cmd() {
    auto q = load_quiver(opt_.input);
    auto c = classify(*q);
    if (structured()) return emit(to_json(c), true);
    auto line = [&](const char* name, const std::vector<VertexId>& vs) {
      out_ << name << ":";
      for (const auto& v : vs) out_ << " " << v;
      out_ << "\n";
    };
    line("sinks", c.sinks);
    line("fin", c.fin);
    line("reg", c.reg);
    line("sing", c.sing);
    return kOk;
  }

  int check_morphism_cmd() {
    auto m = load_morphism(opt_.input);
    auto r = check_morphism(m);
    if (structured()) return emit(to_json(r), r.ok());
    if (r.ok()) out_ << "quiver morphism: both squares commute\n";
    for (const auto& f : r.failures) {
      out_ << "square failure: edge " << f.edge << " ("
           << (f.square == SquareReport::Square::kSrc ? "src" : "rng") << ")\n";
    }
    return r.ok() ? kOk : kCheckFailed;
  }

  int check_regular_cmd() {
    auto m = load_morphism(opt_.input);
    auto r = check_regular(m);
    if (structured()) return emit(to_json(r), r.ok());
    out_ << "A1: pass (" << r.a1_note << ")\n";
    out_ << "A2: " << (r.a2_ok() ? "pass" : "fail") << "\n";
    for (const auto& f : r.a2_failures) {
      out_ << "  A2 failure at " << f.vertex << ": " << to_string(f.reason) << " (" << f.edge << ")\n";
    }
    out_ << "A3: " << (r.a3_ok() ? "pass" : "fail") << "\n";
    for (const auto& v : r.a3_failures) out_ << "  A3 failure at " << v << "\n";
    out_ << (r.ok() ? "regular\n" : "not regular\n");
    return r.ok() ? kOk : kCheckFailed;
  }

  int compose_cmd() {
    auto n = load_morphism(opt_.input);
    auto m = load_morphism(opt_.second);
    auto nm = compose(n, m);
    out_ << morphism_to_json(nm).dump(2) << "\n";
    return kOk;
  }

  int check_covariance_cmd() {
    auto cm = build_corr_morphism(load_morphism(opt_.input));
    auto r = check_covariance(cm);
    if (structured()) return emit(to_json(r), r.ok());
    auto line = [&](const char* name, const ConditionResult& c) {
      out_ << name << ": " << (c.passed() ? "pass" : "fail");
      if (!c.passed()) {
        const auto& w = c.first();
        out_ << " (witness " << w.element << " at " << w.location << ": " << w.detail << ")";
      }
      if (!c.note.empty()) out_ << " [" << c.note << "]";
      out_ << "\n";
    };
    line("C1", r.c1);
    line("C2", r.c2);
    line("C3", r.c3);
    line("C4", r.c4);
    out_ << "C4 routes: reduction " << (r.c4_reduction_route ? "pass" : "fail") << ", operator "
         << (r.c4_operator_route ? "pass" : "fail") << "\n";
    return r.ok() ? kOk : kCheckFailed;
  }

  int c4lemma_cmd() {
    auto cm = build_corr_morphism(load_morphism(opt_.input));
    const auto& cod = cm.cod();
    json results = json::array();
    bool ok = true;
    auto check = [&](const std::string& label, const EdgeVector& g) {
      bool pass = c4lemma_check(cm, g);
      ok = ok && pass;
      results.push_back({{"g", label}, {"pass", pass}});
      if (!structured()) out_ << "g = " << label << ": " << (pass ? "pass" : "fail") << "\n";
    };
    for (const auto& x : cod->edges()) check("delta_" + x.id, EdgeVector::delta(cod, x.id));
    for (std::size_t i = 0; i < opt_.samples; ++i) {
      check("random#" + std::to_string(i), gen_edge_vector(opt_.seed + i, cod));
    }
    if (structured()) return emit({{"ok", ok}, {"checks", results}}, ok);
    return ok ? kOk : kCheckFailed;
  }

  int presentation_cmd() {
    auto q = load_quiver(opt_.input);
    auto p = emit_presentation(q);
    if (structured()) return emit(to_json(p), true);
    out_ << to_string(p);
    return kOk;
  }

  int induced_hom_cmd() {
    auto g = induced_map(load_morphism(opt_.input));
    if (structured()) return emit(to_json(g), true);
    out_ << to_string(g);
    return kOk;
  }

  int verify_induced_cmd() {
    auto r = verify_induced(load_morphism(opt_.input));
    if (structured()) return emit(to_json(r), r.ok());
    for (const auto& e : r.entries) {
      out_ << (e.passed ? "pass " : "FAIL ") << e.tag << "  " << e.relation;
      if (!e.error.empty()) out_ << "  [" << e.error << "]";
      out_ << "\n";
    }
    out_ << (r.ok() ? "all relations preserved\n" : "relation check failed\n");
    return r.ok() ? kOk : kCheckFailed;
  }

  int factor_check_cmd() {
    auto m = load_morphism(opt_.input);
    auto r = check_factor_map(m);
    bool regular = is_regular(m);
    bool equivalent = r.ok() == regular;
    bool ok = r.ok() && equivalent;
    if (structured()) {
      auto j = to_json(r);
      j["regular_quiver_morphism"] = regular;
      j["equivalent"] = equivalent;
      j["ok"] = ok;
      return emit(j, ok);
    }
    out_ << "note: " << r.compactification_note << "\n";
    out_ << "F1: " << (r.f1_ok() ? "pass" : "fail") << "\n";
    for (const auto& e : r.f1_failures) out_ << "  F1 failure at edge " << e << "\n";
    out_ << "F2: " << (r.f2_ok() ? "pass" : "fail") << "\n";
    for (const auto& f : r.f2_failures) {
      out_ << "  F2 failure at (" << f.cod_edge << ", " << f.dom_vertex << "): " << f.preimages
           << " preimages\n";
    }
    out_ << "regular factor: " << (r.regular_ok() ? "pass" : "fail") << "\n";
    for (const auto& v : r.regular_failures) out_ << "  no edge emitted from " << v << "\n";
    out_ << "regular quiver morphism: " << (regular ? "yes" : "no") << "\n";
    out_ << "equivalence: " << (equivalent ? "consistent" : "INCONSISTENT") << "\n";
    return ok ? kOk : kCheckFailed;
  }

  int gen_quiver_cmd() {
    auto q = gen_quiver(opt_.seed, {opt_.max_vertices, opt_.max_edges, opt_.counting});
    out_ << quiver_to_json(*q).dump(2) << "\n";
    return kOk;
  }

  int gen_regular_morphism_cmd() {
    CoverBounds cover;
    cover.max_cover = opt_.max_cover;
    cover.max_dom_vertices = opt_.max_vertices * opt_.max_cover;
    cover.max_dom_edges = opt_.max_edges * opt_.max_cover;
    auto m = gen_regular_morphism(opt_.seed, {opt_.max_vertices, opt_.max_edges, opt_.counting}, cover);
    out_ << morphism_to_json(m).dump(2) << "\n";
    return kOk;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Finite topological quivers: regularity, correspondences and Cuntz-Pimsner checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output mode")
      ->check(CLI::IsMember({"human", "structured"}));

  auto quiver_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("quiver", opt.input, "Quiver JSON file")->required();
    return sub;
  };
  auto morphism_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("morphism", opt.input, "Morphism JSON file")->required();
    return sub;
  };

  quiver_cmd("validate", "Report structural violations");
  quiver_cmd("classify", "Sinks, finite-emitting, regular and singular vertices");
  morphism_cmd("check-morphism", "Check the source and range squares");
  morphism_cmd("check-regular", "Check (A1)-(A3)");
  auto* compose_sub = app.add_subcommand("compose", "Print the composite N o M");
  compose_sub->add_option("n", opt.input, "Second map N")->required();
  compose_sub->add_option("m", opt.second, "First map M")->required();
  morphism_cmd("check-covariance", "Check (C1)-(C4) for the pullback correspondence morphism");
  auto* c4 = morphism_cmd("c4lemma", "Check psi^(1)(sigma_F(g)) = sigma_E(mu1(g))");
  c4->add_option("--samples", opt.samples, "Random g in addition to the basis indicators");
  c4->add_option("--seed", opt.seed, "Seed for random g");
  quiver_cmd("presentation", "Print the weighted Cuntz-Krieger relations");
  morphism_cmd("induced-hom", "Print the induced map on generators");
  morphism_cmd("verify-induced", "Verify the induced map preserves every relation");
  morphism_cmd("factor-check", "Check the factor-map conditions (counting measures only)");
  for (const char* name : {"gen-quiver", "gen-regular-morphism"}) {
    auto* sub = app.add_subcommand(name, "Generate a random instance");
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--max-vertices", opt.max_vertices)->check(CLI::PositiveNumber);
    sub->add_option("--max-edges", opt.max_edges);
    sub->add_flag("--counting", opt.counting, "All weights 1");
    if (std::string(name) == "gen-regular-morphism") {
      sub->add_option("--max-cover", opt.max_cover)->check(CLI::PositiveNumber);
    }
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  Runner runner(opt, out);
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") return runner.validate_cmd();
    if (cmd == "classify") return runner.classify_cmd();
    if (cmd == "check-morphism") return runner.check_morphism_cmd();
    if (cmd == "check-regular") return runner.check_regular_cmd();
    if (cmd == "compose") return runner.compose_cmd();
    if (cmd == "check-covariance") return runner.check_covariance_cmd();
    if (cmd == "c4lemma") return runner.c4lemma_cmd();
    if (cmd == "presentation") return runner.presentation_cmd();
    if (cmd == "induced-hom") return runner.induced_hom_cmd();
    if (cmd == "verify-induced") return runner.verify_induced_cmd();
    if (cmd == "factor-check") return runner.factor_check_cmd();
    if (cmd == "gen-quiver") return runner.gen_quiver_cmd();
    if (cmd == "gen-regular-morphism") return runner.gen_regular_morphism_cmd();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  err << "unknown subcommand " << cmd << "\n";
  return kBadInput;
}

}  // namespace tqv::cli
