#ifndef TQV_TESTS_FIXTURES_HPP_
#define TQV_TESTS_FIXTURES_HPP_

#include <string>

#include "tqv/morphism.hpp"
#include "tqv/quiver.hpp"

// Standard fixtures built in code, mirroring the JSON files under data/.
namespace fixtures {

inline tqv::Rational w(long p, long q = 1) {
  tqv::Rational r(p, q);
  r.canonicalize();
  return r;
}

inline tqv::QuiverPtr q_loop() { return tqv::make_quiver({"u"}, {{"ℓ", "u", "u", w(1)}}); }
inline tqv::QuiverPtr q_wloop() { return tqv::make_quiver({"u"}, {{"ℓ", "u", "u", w(2)}}); }
inline tqv::QuiverPtr q_edge() { return tqv::make_quiver({"a", "b"}, {{"e", "a", "b", w(1)}}); }

inline tqv::QuiverPtr q_2cyc() {
  return tqv::make_quiver({"a", "b"}, {{"e1", "a", "b", w(1)}, {"e2", "b", "a", w(1)}});
}

inline tqv::QuiverPtr q_4cyc() {
  return tqv::make_quiver({"v0", "v1", "v2", "v3"}, {{"f0", "v0", "v1", w(1)},
                                                     {"f1", "v1", "v2", w(1)},
                                                     {"f2", "v2", "v3", w(1)},
                                                     {"f3", "v3", "v0", w(1)}});
}

inline tqv::QuiverPtr e_bad() {
  return tqv::make_quiver({"a", "b"}, {{"g1", "a", "a", w(1)}, {"g2", "a", "b", w(1)}});
}

inline tqv::QuiverMorphism m_collapse() {
  return tqv::QuiverMorphism::from_maps(q_2cyc(), q_loop(), {{"a", "u"}, {"b", "u"}},
                                        {{"e1", "ℓ"}, {"e2", "ℓ"}});
}

inline tqv::QuiverMorphism m_bad_a2() {
  return tqv::QuiverMorphism::from_maps(q_edge(), q_loop(), {{"a", "u"}, {"b", "u"}}, {{"e", "ℓ"}});
}

inline tqv::QuiverMorphism m_bad_a3() {
  return tqv::QuiverMorphism::from_maps(e_bad(), q_loop(), {{"a", "u"}, {"b", "u"}},
                                        {{"g1", "ℓ"}, {"g2", "ℓ"}});
}

inline tqv::QuiverMorphism m_mod2() {
  return tqv::QuiverMorphism::from_maps(
      q_4cyc(), q_2cyc(), {{"v0", "a"}, {"v1", "b"}, {"v2", "a"}, {"v3", "b"}},
      {{"f0", "e1"}, {"f1", "e2"}, {"f2", "e1"}, {"f3", "e2"}});
}

inline std::string data_path(const std::string& name) { return std::string(TQV_DATA_DIR) + "/" + name; }

}  // namespace fixtures

#endif  // TQV_TESTS_FIXTURES_HPP_
