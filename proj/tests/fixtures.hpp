#pragma once

// Shared fixture algebras used across the test binaries.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quivalg/algebra.hpp"
#include "quivalg/quiver.hpp"

namespace fixtures {

inline quivalg::MonomialAlgebra make_algebra(std::vector<std::string> vertices,
                                             std::vector<quivalg::Arrow> arrows,
                                             const std::vector<std::vector<std::string>>& relations) {
  quivalg::Quiver quiver(std::move(vertices), std::move(arrows));
  std::vector<quivalg::Path> paths;
  paths.reserve(relations.size());
  for (const auto& ids : relations) paths.push_back(quivalg::Path::of_ids(quiver, ids));
  return quivalg::MonomialAlgebra(std::move(quiver), std::move(paths));
}

// Two-cycle 2<->6 glued to a tail 3->4->5 and a feeder 1->2.
inline quivalg::MonomialAlgebra f1() {
  return make_algebra({"1", "2", "3", "4", "5", "6"},
                      {{"f", "1", "2"},
                       {"a", "3", "2"},
                       {"b", "2", "6"},
                       {"c", "6", "3"},
                       {"d", "3", "4"},
                       {"e", "4", "5"}},
                      {{"c", "a", "b", "c", "a"}, {"d", "e"}, {"f", "b"}});
}

// 2-cycle with an exit arrow; both cube-like relations on the cycle.
inline quivalg::MonomialAlgebra f2() {
  return make_algebra({"1", "2", "3"},
                      {{"a", "1", "2"}, {"b", "2", "1"}, {"c", "2", "3"}},
                      {{"a", "b", "a"}, {"b", "a", "b"}});
}

// Oriented 3-cycle with a single length-3 relation.
inline quivalg::MonomialAlgebra f3() {
  return make_algebra({"1", "2", "3"},
                      {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}},
                      {{"a", "b", "c"}});
}

// Oriented n-cycle bound by all n windows of length m+1.
inline quivalg::MonomialAlgebra f4(int n, int m) {
  std::vector<std::string> vertices;
  std::vector<quivalg::Arrow> arrows;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    vertices.push_back(std::to_string(i + 1));
    names.push_back("a" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i)
    arrows.push_back({names[i], std::to_string(i + 1), std::to_string((i + 1) % n + 1)});
  std::vector<std::vector<std::string>> relations;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> window;
    for (int j = 0; j <= m; ++j) window.push_back(names[(i + j) % n]);
    relations.push_back(std::move(window));
  }
  return make_algebra(std::move(vertices), std::move(arrows), relations);
}

// 2-cycle with one outgoing tail on each cycle vertex; both 2-cycle words zero.
inline quivalg::MonomialAlgebra f5() {
  return make_algebra({"1", "2", "3", "4"},
                      {{"a1", "2", "3"}, {"a2", "3", "2"}, {"b1", "3", "4"}, {"b2", "2", "1"}},
                      {{"a2", "a1"}, {"a1", "a2"}});
}

// 4-cycle fed by one arrow; two length-4 windows and the feeder junction vanish.
inline quivalg::MonomialAlgebra f6() {
  return make_algebra({"1", "2", "3", "4", "5"},
                      {{"b", "1", "2"},
                       {"a4", "2", "3"},
                       {"a1", "3", "4"},
                       {"a2", "4", "5"},
                       {"a3", "5", "2"}},
                      {{"a4", "a1", "a2", "a3"}, {"a2", "a3", "a4", "a1"}, {"b", "a4"}});
}

// Two 3-cycles joined by a bridge; long window relations plus two junction relations.
inline quivalg::MonomialAlgebra f7() {
  return make_algebra({"1", "2", "3", "4", "5", "6"},
                      {{"g1", "1", "2"},
                       {"g2", "2", "3"},
                       {"g3", "3", "1"},
                       {"b", "3", "4"},
                       {"a3", "4", "5"},
                       {"a1", "5", "6"},
                       {"a2", "6", "4"}},
                      {{"a2", "a3", "a1", "a2", "a3", "a1"},
                       {"b", "a3"},
                       {"g1", "g2", "g3", "g1", "g2"},
                       {"g2", "b"}});
}

// Same quiver as f7 with short relations.
inline quivalg::MonomialAlgebra f8() {
  return make_algebra({"1", "2", "3", "4", "5", "6"},
                      {{"g1", "1", "2"},
                       {"g2", "2", "3"},
                       {"g3", "3", "1"},
                       {"b", "3", "4"},
                       {"a3", "4", "5"},
                       {"a1", "5", "6"},
                       {"a2", "6", "4"}},
                      {{"g1", "g2", "g3"}, {"g2", "b"}, {"a2", "a3"}});
}

// 3-cycle with one exit arrow and the full cycle window zero.
inline quivalg::MonomialAlgebra f9() {
  return make_algebra({"1", "2", "3", "4"},
                      {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}, {"d", "1", "4"}},
                      {{"a", "b", "c"}});
}

// One loop bound by its (m+1)-st power.
inline quivalg::MonomialAlgebra loop_power(int power) {
  std::vector<std::string> word(static_cast<std::size_t>(power), "x");
  return make_algebra({"1"}, {{"x", "1", "1"}}, {word});
}

inline std::vector<quivalg::MonomialAlgebra> all_fixtures() {
  std::vector<quivalg::MonomialAlgebra> algebras;
  algebras.push_back(f1());
  algebras.push_back(f2());
  algebras.push_back(f3());
  algebras.push_back(f4(3, 1));
  algebras.push_back(f4(4, 2));
  algebras.push_back(f5());
  algebras.push_back(f6());
  algebras.push_back(f7());
  algebras.push_back(f8());
  algebras.push_back(f9());
  return algebras;
}

inline quivalg::Path path(const quivalg::MonomialAlgebra& algebra,
                          std::initializer_list<const char*> ids) {
  std::vector<std::string> names(ids.begin(), ids.end());
  return quivalg::Path::of_ids(algebra.quiver(), names);
}

inline std::vector<std::string> renders(const quivalg::Quiver& quiver,
                                        const std::vector<quivalg::Path>& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(p.render(quiver));
  return out;
}

}  // namespace fixtures
