#pragma once

#include <optional>
#include <vector>

#include "quivalg/algebra.hpp"

namespace quivalg {

struct MaximalPathEntry {
  Path path;
  // (arrow, relation index) recorded for every one-arrow extension that dies
  std::vector<std::pair<int, int>> right_blocks;
  std::vector<std::pair<int, int>> left_blocks;
};

struct MaximalPathSet {
  std::vector<MaximalPathEntry> entries;  // catalog order
  std::vector<Path> paths() const;
};

// Nonzero paths that die under every one-arrow extension on either side.
MaximalPathSet maximal_paths(const MonomialAlgebra& algebra);

struct UmpWitness {
  Path first;
  Path second;
  int shared_arrow;
};

struct UmpVerdict {
  bool holds = false;
  std::optional<UmpWitness> witness;
};

// True when distinct maximal paths never share an arrow.
UmpVerdict is_ump(const MonomialAlgebra& algebra);

struct MultiserialWitness {
  int arrow;
  bool right_side;            // true: too many continuations, false: too many predecessors
  std::vector<int> neighbors;  // the offending arrows
};

struct MultiserialVerdict {
  bool holds = false;
  std::optional<MultiserialWitness> witness;
};

// Every arrow has at most one nonzero continuation and one nonzero predecessor.
MultiserialVerdict is_special_multiserial(const MonomialAlgebra& algebra);

bool is_quadratic(const MonomialAlgebra& algebra);

struct CriterionEntry {
  Path relation;
  bool satisfied = false;
  std::optional<Path> cycle;
};

struct CriterionVerdict {
  bool holds = false;
  std::vector<CriterionEntry> entries;  // one per relation with more than two arrows
};

// For each long relation r, looks for a cycle u such that the relations
// dividing powers of u are exactly {r}.  Only defined for special
// multiserial algebras; throws HypothesisError otherwise.
CriterionVerdict ump_criterion(const MonomialAlgebra& algebra);

enum class NakayamaTag { kNotNakayama, kLinear, kSelfinjective, kCyclicOther };

struct NakayamaClassification {
  NakayamaTag tag = NakayamaTag::kNotNakayama;
  int n = 0;                 // selfinjective: cycle length
  int m = 0;                 // selfinjective: compositions of m+1 consecutive arrows vanish
  std::optional<bool> ump;   // selfinjective only
};

NakayamaClassification classify_nakayama(const MonomialAlgebra& algebra);

const char* nakayama_tag_name(NakayamaTag tag);

}  // namespace quivalg
