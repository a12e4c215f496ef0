#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/homology.hpp"
#include "quivalg/parse.hpp"
#include "quivalg/randomgen.hpp"
#include "quivalg/structure.hpp"

using namespace quivalg;

namespace {

bool requirement_holds(Requirement require, const MonomialAlgebra& algebra) {
  switch (require) {
    case Requirement::kAny: return true;
    case Requirement::kQuadratic: return is_quadratic(algebra);
    case Requirement::kSpecialMultiserial: return is_special_multiserial(algebra).holds;
    case Requirement::kUmp: return is_ump(algebra).holds;
  }
  return false;
}

}  // namespace

TEST_CASE("requirement names round-trip") {
  for (Requirement require : {Requirement::kAny, Requirement::kQuadratic, Requirement::kSpecialMultiserial,
                              Requirement::kUmp}) {
    CHECK(requirement_from_name(requirement_name(require)) == require);
  }
  CHECK(std::string(requirement_name(Requirement::kSpecialMultiserial)) == "special_multiserial");
  CHECK(!requirement_from_name("nonsense").has_value());
}

TEST_CASE("mix_seed is deterministic and spreads") {
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (std::uint64_t index = 0; index < 8; ++index) seen.insert(mix_seed(seed, index));
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("generation parameters are validated") {
  RandomParams params;

  params.vertices = 0;
  CHECK_THROWS_AS(random_document(1, params), Error);

  params = RandomParams{};
  params.arrows = params.vertices - 2;
  CHECK_THROWS_AS(random_document(1, params), Error);

  params = RandomParams{};
  params.max_relation_length = 1;
  CHECK_THROWS_AS(random_document(1, params), Error);

  params = RandomParams{};
  params.attempt_cap = 0;
  CHECK_THROWS_AS(random_document(1, params), Error);

  params = RandomParams{};
  params.relation_count = -1;
  CHECK_THROWS_AS(random_document(1, params), Error);
}

TEST_CASE("same seed reproduces the document") {
  RandomParams params;
  for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
    CAPTURE(seed);
    QuiverDocument first = random_document(seed, params);
    QuiverDocument second = random_document(seed, params);
    CHECK(first == second);
  }

  std::set<std::string> printed;
  for (std::uint64_t seed = 0; seed < 6; ++seed) printed.insert(print_document(random_document(seed, RandomParams{})));
  CHECK(printed.size() >= 2);
}

TEST_CASE("generated documents satisfy their contract") {
  for (Requirement require : {Requirement::kAny, Requirement::kQuadratic, Requirement::kSpecialMultiserial,
                              Requirement::kUmp}) {
    RandomParams params;
    params.require = require;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      CAPTURE(requirement_name(require));
      CAPTURE(seed);
      QuiverDocument document = random_document(seed, params);
      CHECK(parse_quiver_file(print_document(document)) == document);

      MonomialAlgebra algebra = document_to_algebra(document);
      const Quiver& quiver = algebra.quiver();
      CHECK(quiver.vertex_count() == params.vertices);
      CHECK(quiver.arrow_count() == params.arrows);
      CHECK(quiver.is_weakly_connected());
      CHECK(algebra.is_admissible());
      CHECK(requirement_holds(require, algebra));

      CHECK(oracles::admissible_naive(quiver, algebra.relations()));
      CHECK(algebra.catalog().paths == oracles::catalog_naive(quiver, algebra.relations()));
      CHECK(maximal_paths(algebra).paths() == oracles::maximal_naive(quiver, algebra.relations()));

      MonomialAlgebra stripped(quiver, {});
      CHECK(stripped.is_admissible() == oracles::admissible_naive(quiver, {}));

      if (seed <= 8) {
        for (const Path& p : algebra.catalog().paths) {
          MinimalKillerSets sets = minimal_killers(algebra, p);
          oracles::KillersNaive expected =
              oracles::killers_naive(quiver, algebra.relations(), algebra.catalog().paths, p);
          CHECK(sets.right == expected.right);
          CHECK(sets.left == expected.left);
        }
      }
    }
  }
}

TEST_CASE("rejection sampling reports exhaustion") {
  RandomParams params;
  params.require = Requirement::kUmp;
  params.attempt_cap = 1;

  int exhausted = 0;
  std::string message;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    try {
      random_document(seed, params);
    } catch (const GenerationError& error) {
      ++exhausted;
      message = error.what();
    }
  }
  CHECK(exhausted >= 1);
  CHECK(exhausted < 40);
  CHECK(message.find("no instance satisfying ump") != std::string::npos);
  CHECK(message.find("after 1 attempts") != std::string::npos);
}
