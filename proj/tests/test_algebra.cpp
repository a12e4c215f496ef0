#include "doctest.h"

#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quivalg/algebra.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/matcher.hpp"

using quivalg::MonomialAlgebra;
using quivalg::Path;
using quivalg::Quiver;

TEST_CASE("factor matcher finds patterns and stays dead") {
  quivalg::FactorMatcher m(3, {{0}, {1, 2}});
  CHECK(m.has_factor({0}));
  CHECK(m.has_factor({2, 1, 2}));
  CHECK_FALSE(m.has_factor({1, 1, 1}));
  CHECK_FALSE(m.has_factor({2, 1}));

  int s = m.root();
  s = m.step(s, 1);
  CHECK_FALSE(m.dead(s));
  s = m.step(s, 2);
  CHECK(m.dead(s));
  // absorbing: no way back out
  for (int x = 0; x < 3; ++x) CHECK(m.dead(m.step(s, x)));
}

TEST_CASE("normalization dedups and drops divisible relations") {
  auto f1 = fixtures::f1();
  CHECK(f1.relations().size() == 3);
  CHECK(f1.removed_relations().empty());

  Quiver q = f1.quiver();
  std::vector<Path> rels;
  rels.push_back(Path::of_ids(q, {"d", "e"}));
  rels.push_back(Path::of_ids(q, {"c", "d", "e"}));
  rels.push_back(Path::of_ids(q, {"d", "e"}));
  auto norm = quivalg::normalize_relations(q, rels);
  REQUIRE(norm.kept.size() == 1);
  CHECK(norm.kept[0].render(q) == "d.e");
  REQUIRE(norm.removed.size() == 1);
  CHECK(norm.removed[0].render(q) == "c.d.e");
}

TEST_CASE("relations must be nontrivial paths of length at least two") {
  Quiver q({"1", "2"}, {{"a", "1", "2"}});
  CHECK_THROWS_AS(MonomialAlgebra(q, {Path::of_ids(q, {"a"})}), quivalg::RelationError);
  CHECK_THROWS_AS(MonomialAlgebra(q, {Path::trivial(0)}), quivalg::RelationError);
}

TEST_CASE("zero test against the relation ideal") {
  auto f1 = fixtures::f1();
  CHECK_FALSE(f1.is_zero(fixtures::path(f1, {"a", "b"})));
  CHECK(f1.is_zero(fixtures::path(f1, {"f", "b"})));
  CHECK_FALSE(f1.is_zero(fixtures::path(f1, {"a", "b", "c", "a", "b", "c", "d"})));
  CHECK(f1.is_zero(fixtures::path(f1, {"c", "a", "b", "c", "a", "b"})));
  CHECK(f1.dividing_relation(fixtures::path(f1, {"d", "e"})) >= 0);
  CHECK(f1.dividing_relation(fixtures::path(f1, {"a", "b"})) == -1);

  auto f7 = fixtures::f7();
  CHECK(f7.is_zero(fixtures::path(f7, {"a2", "a3", "a1", "a2", "a3", "a1"})));
  CHECK_FALSE(f7.is_zero(fixtures::path(f7, {"a1", "a2", "a3", "a1", "a2", "a3"})));
}

TEST_CASE("admissibility accepts bounded cycles and rejects unbounded ones") {
  CHECK(fixtures::f3().is_admissible());
  CHECK(fixtures::f4(2, 1).is_admissible());

  Quiver cyc({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
  MonomialAlgebra free_cycle(cyc, {});
  CHECK_FALSE(free_cycle.is_admissible());
  REQUIRE(free_cycle.admissibility_violation().has_value());
  const Path& w = free_cycle.admissibility_violation()->witness_cycle;
  CHECK(w.source(cyc) == w.target(cyc));
  CHECK_FALSE(free_cycle.is_zero(w));
  CHECK_THROWS_AS(free_cycle.catalog(), quivalg::AdmissibilityError);
  CHECK_THROWS_AS(free_cycle.dimension(), quivalg::AdmissibilityError);

  // one relation can be enough to bound a 2-cycle
  Quiver two({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  MonomialAlgebra bounded(two, {Path::of_ids(two, {"a", "b"})});
  CHECK(bounded.is_admissible());
  CHECK(bounded.catalog().paths.size() == 3);  // a, b, ba

  MonomialAlgebra unbounded(two, {});
  CHECK_FALSE(unbounded.is_admissible());
}

TEST_CASE("admissibility matches the state-graph oracle on fixtures") {
  for (const auto& algebra : fixtures::all_fixtures()) {
    CHECK(algebra.is_admissible() ==
          oracles::admissible_naive(algebra.quiver(), algebra.relations()));
    CHECK(algebra.is_admissible());
  }
}

TEST_CASE("catalog agrees with brute-force enumeration") {
  for (const auto& algebra : fixtures::all_fixtures()) {
    auto naive = oracles::catalog_naive(algebra.quiver(), algebra.relations());
    CHECK(algebra.catalog().paths == naive);
  }
}

TEST_CASE("catalog is factor closed and indexed by endpoints") {
  auto f7 = fixtures::f7();
  const auto& cat = f7.catalog();
  for (const auto& p : cat.paths) {
    for (int len = 1; len <= p.length(); ++len)
      for (int off = 0; off + len <= p.length(); ++off)
        CHECK(cat.contains(p.subpath(off, len)));
  }
  for (int v = 0; v < f7.quiver().vertex_count(); ++v) {
    for (int i : cat.from[v]) CHECK(cat.paths[i].source(f7.quiver()) == v);
    for (int i : cat.into[v]) CHECK(cat.paths[i].target(f7.quiver()) == v);
  }
}

TEST_CASE("catalog order is lexicographic") {
  auto f3 = fixtures::f3();
  auto rendered = fixtures::renders(f3.quiver(), f3.catalog().paths);
  CHECK(rendered == std::vector<std::string>{"a", "a.b", "b", "b.c", "b.c.a", "b.c.a.b", "c",
                                             "c.a", "c.a.b"});
}

TEST_CASE("dimension counts trivial paths plus the catalog") {
  CHECK(fixtures::f3().dimension() == 3 + 9);
  auto f5 = fixtures::f5();
  CHECK(f5.dimension() == 4 + static_cast<int>(f5.catalog().paths.size()));
  auto rendered = fixtures::renders(f5.quiver(), f5.catalog().paths);
  CHECK(rendered ==
        std::vector<std::string>{"a1", "a1.b1", "a2", "a2.b2", "b1", "b2"});
}
