#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "tqv/cli.hpp"
#include "tqv/generate.hpp"
#include "tqv/io.hpp"

using namespace tqv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tqv");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("tqv_cli_" + std::to_string(counter_++))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

const std::string kData = TQV_DATA_DIR;

}  // namespace

TEST_CASE("check-regular on fixtures") {
  auto ok = run({"--format", "structured", "check-regular", kData + "/m_collapse.json"});
  CHECK(ok.code == cli::kOk);
  auto j = json::parse(ok.out);
  CHECK(j["a2_failures"].empty());
  CHECK(j["a3_failures"].empty());

  auto bad = run({"check-regular", kData + "/m_bad_a3.json"});
  CHECK(bad.code == cli::kCheckFailed);
  CHECK(has(bad.out, "A3 failure at b"));
  auto bad_s = run({"check-regular", kData + "/m_bad_a3.json", "--format", "structured"});
  CHECK(json::parse(bad_s.out)["a3_failures"] == json::array({"b"}));
}

TEST_CASE("presentation prints the weighted relations") {
  auto r = run({"presentation", kData + "/q_wloop.json"});
  CHECK(r.code == cli::kOk);
  CHECK(has(r.out, "t_ℓ* t_ℓ = 2 p_u\n"));
  CHECK(has(r.out, "p_u = (1/2) t_ℓ t_ℓ*\n"));
  auto s = run({"--format", "structured", "presentation", kData + "/q_loop.json"});
  CHECK(json::parse(s.out)["relations"].size() == 6);
}

TEST_CASE("other subcommands on fixtures") {
  CHECK(run({"validate", kData + "/q_loop.json"}).code == cli::kOk);
  auto cls = run({"classify", kData + "/q_edge.json"});
  CHECK(has(cls.out, "sinks: b\n"));
  CHECK(has(cls.out, "reg: a\n"));
  CHECK(run({"check-morphism", kData + "/m_mod2.json"}).code == cli::kOk);
  CHECK(run({"check-covariance", kData + "/m_collapse.json"}).code == cli::kOk);
  auto cov = run({"check-covariance", kData + "/m_bad_a3.json"});
  CHECK(cov.code == cli::kCheckFailed);
  CHECK(has(cov.out, "C3: fail (witness delta_u at b"));
  CHECK(run({"c4lemma", kData + "/m_mod2.json", "--samples", "4", "--seed", "9"}).code == cli::kOk);
  CHECK(run({"c4lemma", kData + "/m_bad_a2.json"}).code == cli::kBadInput);
  auto ind = run({"induced-hom", kData + "/m_collapse.json"});
  CHECK(ind.out == "p_u -> p_a + p_b\nt_ℓ -> t_e1 + t_e2\n");
  CHECK(run({"induced-hom", kData + "/m_bad_a3.json"}).code == cli::kBadInput);
  CHECK(run({"verify-induced", kData + "/m_mod2.json"}).code == cli::kOk);
  CHECK(run({"factor-check", kData + "/m_collapse.json"}).code == cli::kOk);
  auto f = run({"factor-check", kData + "/m_bad_a2.json"});
  CHECK(f.code == cli::kCheckFailed);
  CHECK(has(f.out, "F2 failure at (ℓ, a): 0 preimages"));
}

TEST_CASE("compose prints a loadable composite") {
  TempDir dir;
  auto r = run({"compose", kData + "/m_collapse.json", kData + "/m_mod2.json"});
  REQUIRE(r.code == cli::kOk);
  auto path = dir.write("nm.json", r.out);
  auto nm = load_morphism(path);
  CHECK(nm == compose(fixtures::m_collapse(), fixtures::m_mod2()));
  CHECK(run({"check-regular", path}).code == cli::kOk);
  CHECK(run({"compose", kData + "/m_collapse.json", kData + "/m_collapse.json"}).code == cli::kBadInput);
}

TEST_CASE("malformed input exits 2 with a location") {
  TempDir dir;
  auto missing = run({"validate", "/nonexistent.json"});
  CHECK(missing.code == cli::kBadInput);
  CHECK(has(missing.err, "/nonexistent.json"));

  auto bad = dir.write("bad.json", R"({"vertices": ["u"], "edges": [{"id": "l", "src": "u", "rng": "u", "weight": "x"}]})");
  auto r = run({"classify", bad});
  CHECK(r.code == cli::kBadInput);
  CHECK(has(r.err, "quiver.edges[0].weight"));

  auto syntax = dir.write("syntax.json", "{");
  CHECK(run({"presentation", syntax}).code == cli::kBadInput);

  // Structural problems are a failed check for validate, bad input elsewhere.
  auto zero = dir.write("zero.json", R"({"vertices": ["u"], "edges": [{"id": "l", "src": "u", "rng": "u", "weight": "0/1"}]})");
  auto v = run({"validate", zero});
  CHECK(v.code == cli::kCheckFailed);
  CHECK(has(v.out, "non-positive weight l"));
  CHECK(run({"classify", zero}).code == cli::kBadInput);

  auto weighted = dir.write("weighted.json",
                            R"({"dom": ")" + kData + R"(/q_2cyc.json", "cod": ")" + kData +
                                R"(/q_wloop.json", "vmap": {"a": "u", "b": "u"}, "emap": {"e1": "ℓ", "e2": "ℓ"}})");
  CHECK(run({"factor-check", weighted}).code == cli::kBadInput);
  CHECK(run({"check-regular", weighted}).code == cli::kCheckFailed);
}

TEST_CASE("argument errors and help") {
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({"validate"}).code == cli::kBadInput);
  CHECK(run({"--format", "xml", "validate", kData + "/q_loop.json"}).code == cli::kBadInput);
  CHECK(run({"gen-quiver", "--seed", "-3"}).code == cli::kBadInput);
  auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(has(help.out, "check-covariance"));
}

TEST_CASE("generators are deterministic and round-trip") {
  auto a = run({"gen-quiver", "--seed", "17", "--max-vertices", "5", "--max-edges", "7"});
  auto b = run({"gen-quiver", "--seed", "17", "--max-vertices", "5", "--max-edges", "7"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  auto q = quiver_from_json(json::parse(a.out));
  CHECK(*q == *gen_quiver(17, {5, 7, false}));

  auto m1 = run({"gen-regular-morphism", "--seed", "8", "--counting"});
  auto m2 = run({"gen-regular-morphism", "--seed", "8", "--counting"});
  CHECK(m1.out == m2.out);
  auto m = morphism_from_json(json::parse(m1.out), ".");
  CHECK(is_regular(m));
  for (const auto& e : m.dom()->edges()) CHECK(e.weight == 1);
}

TEST_CASE("exit-code contract: exit 1 iff the structured report is not ok") {
  TempDir dir;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto m = gen_regular_morphism(seed, {3, 5, true}, {});
    int k = 0;
    for (auto candidate : {std::optional<QuiverMorphism>(m), mutate_drop_edge(m, seed),
                           mutate_merge_edges(m, seed), mutate_add_sink(m, seed)}) {
      if (!candidate) continue;
      auto path = dir.write("m" + std::to_string(seed) + "_" + std::to_string(k++) + ".json",
                            morphism_to_json(*candidate).dump());
      for (const char* cmd : {"check-regular", "check-covariance", "factor-check", "check-morphism"}) {
        auto r = run({"--format", "structured", cmd, path});
        REQUIRE(r.code != cli::kBadInput);
        bool ok = json::parse(r.out)["ok"];
        CHECK(r.code == (ok ? cli::kOk : cli::kCheckFailed));
      }
      bool regular = is_regular(*candidate);
      auto v = run({"--format", "structured", "verify-induced", path});
      CHECK(v.code == (regular ? cli::kOk : cli::kBadInput));
    }
  }
}
