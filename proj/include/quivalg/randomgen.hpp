#ifndef QUIVALG_RANDOMGEN_HPP
#define QUIVALG_RANDOMGEN_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "quivalg/parse.hpp"

namespace quivalg {

enum class Requirement { kAny, kQuadratic, kSpecialMultiserial, kUmp };

const char* requirement_name(Requirement requirement);
std::optional<Requirement> requirement_from_name(const std::string& name);

struct RandomParams {
  int vertices = 5;
  int arrows = 7;
  int relation_count = 3;
  int max_relation_length = 3;
  Requirement require = Requirement::kAny;
  int attempt_cap = 400;
};

// Deterministic per-sample seed derivation for batch runs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Generates a connected quiver with relations sampled from random walks,
// repairs admissibility (and the multiserial condition when requested) by
// inserting length-2 relations, and rejection-samples until `require` holds.
// Throws GenerationError once attempt_cap attempts are exhausted.
QuiverDocument random_document(std::uint64_t seed, const RandomParams& params);

}  // namespace quivalg

#endif
