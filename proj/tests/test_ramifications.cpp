#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/ramifications.hpp"

using quivalg::ComponentShape;
using quivalg::MonomialAlgebra;
using quivalg::Path;
using quivalg::Quiver;

namespace {

std::map<std::string, std::string> omega_table(const MonomialAlgebra& algebra) {
  const Quiver& q = algebra.quiver();
  std::map<std::string, std::string> table;
  for (int a = 0; a < q.arrow_count(); ++a)
    table[q.arrow(a).id] = quivalg::omega_path(q, a).render(q);
  return table;
}

std::set<std::pair<std::string, std::string>> edge_set(const quivalg::RamificationsGraph& graph,
                                                       const Quiver& q) {
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [from, to] : graph.edges)
    edges.insert({graph.vertices[from].render(q), graph.vertices[to].render(q)});
  return edges;
}

}  // namespace

TEST_CASE("one sided extension paths") {
  auto f1 = fixtures::f1();
  CHECK(omega_table(f1) == std::map<std::string, std::string>{
                               {"a", "a"}, {"b", "b.c"}, {"c", "b.c"}, {"d", "d.e"},
                               {"e", "d.e"}, {"f", "f"}});

  auto f2 = fixtures::f2();
  CHECK(omega_table(f2) ==
        std::map<std::string, std::string>{{"a", "b.a"}, {"b", "b.a"}, {"c", "c"}});

  auto f6 = fixtures::f6();
  CHECK(omega_table(f6) == std::map<std::string, std::string>{{"a1", "a4.a1.a2.a3"},
                                                              {"a2", "a4.a1.a2.a3"},
                                                              {"a3", "a4.a1.a2.a3"},
                                                              {"a4", "a4.a1.a2.a3"},
                                                              {"b", "b"}});

  auto f9 = fixtures::f9();
  CHECK(omega_table(f9) == std::map<std::string, std::string>{
                               {"a", "a.b.c"}, {"b", "a.b.c"}, {"c", "a.b.c"}, {"d", "d"}});

  // covering cycle on a pure cycle quiver, anchored at the smallest arrow
  auto f4 = fixtures::f4(3, 1);
  CHECK(omega_table(f4) == std::map<std::string, std::string>{
                               {"a1", "a1.a2.a3"}, {"a2", "a1.a2.a3"}, {"a3", "a1.a2.a3"}});
}

TEST_CASE("every arrow occurs in its own extension path") {
  for (const auto& algebra : fixtures::all_fixtures()) {
    const Quiver& q = algebra.quiver();
    for (int a = 0; a < q.arrow_count(); ++a) {
      Path w = quivalg::omega_path(q, a);
      bool found = false;
      for (int x : w.arrows()) found |= (x == a);
      CHECK(found);
    }
  }
}

TEST_CASE("ramifications graph of the two cycle fixture") {
  auto f1 = fixtures::f1();
  auto graph = quivalg::ramifications_graph(f1);
  CHECK(fixtures::renders(f1.quiver(), graph.vertices) ==
        std::vector<std::string>{"a", "b.c", "d.e", "f"});
  CHECK(edge_set(graph, f1.quiver()) ==
        std::set<std::pair<std::string, std::string>>{
            {"a", "b.c"}, {"b.c", "a"}, {"b.c", "d.e"}});
  REQUIRE(graph.components.size() == 2);
  CHECK(graph.components[0] == std::vector<int>{0, 1, 2});
  CHECK(graph.components[1] == std::vector<int>{3});
}

TEST_CASE("ramifications graph goldens") {
  auto f2 = fixtures::f2();
  auto g2 = quivalg::ramifications_graph(f2);
  CHECK(g2.components.size() == 1);
  CHECK(edge_set(g2, f2.quiver()) ==
        std::set<std::pair<std::string, std::string>>{{"b.a", "c"}});

  auto f5 = fixtures::f5();
  auto g5 = quivalg::ramifications_graph(f5);
  CHECK(g5.components.size() == 2);
  CHECK(edge_set(g5, f5.quiver()) == std::set<std::pair<std::string, std::string>>{
                                         {"a1", "b1"}, {"a2", "b2"}});

  auto f6 = fixtures::f6();
  auto g6 = quivalg::ramifications_graph(f6);
  CHECK(g6.edges.empty());  // the junction product vanishes
  CHECK(g6.components.size() == 2);

  auto f9 = fixtures::f9();
  auto g9 = quivalg::ramifications_graph(f9);
  CHECK(g9.components.size() == 1);
  CHECK(edge_set(g9, f9.quiver()) ==
        std::set<std::pair<std::string, std::string>>{{"a.b.c", "d"}});
}

TEST_CASE("disconnected quivers are rejected") {
  Quiver two_islands({"1", "2", "3", "4"},
                     {{"a", "1", "2"}, {"b", "3", "4"}});
  MonomialAlgebra algebra(two_islands, {});
  CHECK_THROWS_AS(quivalg::ramifications_graph(algebra), quivalg::HypothesisError);
  CHECK_THROWS_AS(quivalg::decompose_maximal_paths(algebra), quivalg::HypothesisError);
}

TEST_CASE("component algebras restrict arrows and relations") {
  auto f1 = fixtures::f1();
  auto graph = quivalg::ramifications_graph(f1);

  auto big = quivalg::induced_component_algebra(f1, graph, 0);
  std::vector<std::string> arrow_ids;
  for (int a : big.parent_arrows) arrow_ids.push_back(f1.quiver().arrow(a).id);
  CHECK(arrow_ids == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(fixtures::renders(big.algebra.quiver(), big.algebra.relations()) ==
        std::vector<std::string>{"c.a.b.c.a", "d.e"});
  CHECK(fixtures::renders(big.algebra.quiver(), big.maximal.paths()) ==
        std::vector<std::string>{"a.b.c.a.b.c.d", "e"});

  auto small = quivalg::induced_component_algebra(f1, graph, 1);
  CHECK(small.algebra.quiver().arrow_count() == 1);
  CHECK(small.algebra.relations().empty());
  CHECK(fixtures::renders(small.algebra.quiver(), small.maximal.paths()) ==
        std::vector<std::string>{"f"});

  // paths lift back to the parent quiver by arrow id
  Path inner = small.maximal.paths()[0];
  Path lifted = small.lift_to(f1.quiver(), inner);
  CHECK(lifted.render(f1.quiver()) == "f");

  auto f6 = fixtures::f6();
  auto g6 = quivalg::ramifications_graph(f6);
  auto cycle = quivalg::induced_component_algebra(f6, g6, 0);
  CHECK(cycle.algebra.quiver().arrow_count() == 4);
  CHECK(fixtures::renders(cycle.algebra.quiver(), cycle.algebra.relations()) ==
        std::vector<std::string>{"a2.a3.a4.a1", "a4.a1.a2.a3"});
}

TEST_CASE("maximal paths split across components") {
  auto f1 = fixtures::f1();
  auto decomposition = quivalg::decompose_maximal_paths(f1);
  REQUIRE(decomposition.components.size() == 2);
  CHECK(decomposition.full.entries.size() == 3);
  std::map<std::string, int> assignment;
  for (std::size_t i = 0; i < decomposition.full.entries.size(); ++i)
    assignment[decomposition.full.entries[i].path.render(f1.quiver())] =
        decomposition.assignment[i];
  CHECK(assignment == std::map<std::string, int>{
                          {"a.b.c.a.b.c.d", 0}, {"e", 0}, {"f", 1}});

  for (const auto& algebra : fixtures::all_fixtures())
    CHECK_NOTHROW(quivalg::decompose_maximal_paths(algebra));
}

TEST_CASE("unilateral connectivity inside components") {
  auto f1 = fixtures::f1();
  auto graph = quivalg::ramifications_graph(f1);
  CHECK(quivalg::is_unilaterally_connected(graph, 0).holds);
  CHECK(quivalg::is_unilaterally_connected(graph, 1).holds);

  // two feeders into a join are weakly but not unilaterally connected
  Quiver join({"1", "2", "3", "4"},
              {{"x", "1", "3"}, {"y", "2", "3"}, {"z", "3", "4"}});
  MonomialAlgebra algebra(join, {});
  auto jg = quivalg::ramifications_graph(algebra);
  REQUIRE(jg.components.size() == 1);
  auto verdict = quivalg::is_unilaterally_connected(jg, 0);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness.has_value());
  std::set<std::string> pair{verdict.witness->first.render(join),
                             verdict.witness->second.render(join)};
  CHECK(pair == std::set<std::string>{"x", "y"});
}

TEST_CASE("component shapes") {
  auto f2 = fixtures::f2();
  auto g2 = quivalg::ramifications_graph(f2);
  auto shape2 = quivalg::component_shape(f2.quiver(), g2, 0);
  CHECK(shape2.shape == ComponentShape::kNakayamaPath);
  CHECK(shape2.vertex_is_cycle == std::vector<bool>{true, false});

  auto f1 = fixtures::f1();
  auto g1 = quivalg::ramifications_graph(f1);
  CHECK(quivalg::component_shape(f1.quiver(), g1, 0).shape == ComponentShape::kOther);
  CHECK(quivalg::component_shape(f1.quiver(), g1, 1).shape == ComponentShape::kNakayamaPath);

  auto f9 = fixtures::f9();
  auto g9 = quivalg::ramifications_graph(f9);
  auto shape9 = quivalg::component_shape(f9.quiver(), g9, 0);
  CHECK(shape9.shape == ComponentShape::kNakayamaPath);
  CHECK(shape9.vertex_is_cycle == std::vector<bool>{true, false});

  // a pure cycle collapses to one vertex
  auto f4 = fixtures::f4(3, 1);
  auto g4 = quivalg::ramifications_graph(f4);
  REQUIRE(g4.vertices.size() == 1);
  CHECK(quivalg::component_shape(f4.quiver(), g4, 0).shape == ComponentShape::kNakayamaPath);
  CHECK(quivalg::component_shape(f4.quiver(), g4, 0).vertex_is_cycle == std::vector<bool>{true});

  CHECK(std::string(quivalg::component_shape_name(ComponentShape::kNakayamaCycle)) ==
        "nakayama_cycle");
}

TEST_CASE("special multiserial fixtures have serial components") {
  for (auto* make : {fixtures::f5, fixtures::f6, fixtures::f7, fixtures::f8}) {
    auto algebra = make();
    auto graph = quivalg::ramifications_graph(algebra);
    for (std::size_t c = 0; c < graph.components.size(); ++c) {
      auto shape = quivalg::component_shape(algebra.quiver(), graph, static_cast<int>(c));
      CHECK(shape.shape != ComponentShape::kOther);
    }
  }
}
