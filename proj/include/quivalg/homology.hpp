#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quivalg/structure.hpp"

namespace quivalg {

inline constexpr int kInfiniteDimension = -1;

struct MinimalKillerSets {
  std::vector<Path> right;  // R(p): minimal nonzero q with pq = 0, sorted
  std::vector<Path> left;   // L(p): minimal nonzero q with qp = 0, sorted
};

// Minimal is meant per side: no proper prefix of a right killer kills p, no
// proper suffix of a left killer does.  Throws Error when p is zero.
MinimalKillerSets minimal_killers(const MonomialAlgebra& algebra, const Path& p);

enum class PerfectPairFailure { kNone, kP1, kP2, kP3 };

struct PerfectPairVerdict {
  bool holds = false;
  PerfectPairFailure failed = PerfectPairFailure::kNone;
};

// P1: both nontrivial, t(p) = s(q), pq = 0.  P2: R(p) = {q}.  P3: L(q) = {p}.
PerfectPairVerdict is_perfect_pair(const MonomialAlgebra& algebra, const Path& p, const Path& q);

struct PerfectStructure {
  std::vector<std::pair<Path, Path>> pairs;        // every perfect pair
  std::vector<Path> paths;                         // perfect paths, sorted
  std::vector<std::vector<Path>> relation_cycles;  // rotated to start at their smallest member
};

// Perfect pairs force a unique successor, so perfect paths are the members
// of cycles of the successor map over the catalog.
PerfectStructure perfect_paths(const MonomialAlgebra& algebra);

enum class ComponentClass { kPerfect, kAcyclic, kMixed };

const char* component_class_name(ComponentClass c);

struct RelationsQuiver {
  std::vector<Path> vertices;                // sorted
  std::vector<std::pair<int, int>> arrows;   // (q, p) with p in L(q), sorted
  std::vector<std::vector<int>> components;  // sorted partition of vertex indices
  std::vector<int> component_of;             // per vertex
  std::vector<ComponentClass> classes;       // per component
  std::vector<bool> bounded;                 // per vertex: no reachable directed cycle
  int d = 0;                                 // longest path over acyclic components

  int vertex_index(const Path& p) const;
};

// Vertices are the proper prefixes and suffixes of relations plus any arrow
// covered by neither; q -> p exactly when p is a left-minimal killer of q.
RelationsQuiver relations_quiver(const MonomialAlgebra& algebra);

struct ComponentClassification {
  std::vector<ComponentClass> classes;
  std::vector<bool> bounded;
  int d = 0;
};

ComponentClassification classify_components(const RelationsQuiver& quiver);

// Number of steps to a projective resolution of Ap, or kInfiniteDimension
// when the left-killer recursion cycles.
int projective_dimension(const MonomialAlgebra& algebra, const Path& p);

struct GorensteinVerdict {
  bool applicable = false;
  std::string failed_hypothesis;  // set when not applicable
  bool holds = false;
  int bound = 0;  // d + 2 when the verdict holds
};

struct HomologicalReport {
  bool cm_free = false;
  PerfectStructure perfect;
  RelationsQuiver relations;
  GorensteinVerdict gorenstein;
  GorensteinVerdict finite_global_dimension;
  bool component_criterion_cm_free = false;
  bool cm_criteria_agree = false;
};

// cm_free is decided by perfect-path emptiness and is valid for every
// monomial algebra; the Gorenstein and global-dimension verdicts apply only
// under the special multiserial + UMP hypotheses and name the failing one
// otherwise.  The component-criterion diagnostic is recorded either way.
HomologicalReport homological_report(const MonomialAlgebra& algebra);

struct OverlapWitness {
  Path p, q, x, p_prime, q_prime;
  bool same_path = false;
};

// Splice witnesses between perfect paths: x a nontrivial suffix of p and
// prefix of q with the spliced p'xq' nonzero; for p = q the outer parts must
// be nontrivial too.
std::vector<OverlapWitness> overlaps(const MonomialAlgebra& algebra, const PerfectStructure& perfect);

struct StableCategoryVerdict {
  bool equivalence = false;
  std::vector<int> cycle_lengths;  // sorted relation-cycle lengths when equivalent
  std::optional<Path> offending;   // smallest perfect path breaking the condition
};

// Equivalence holds exactly when every perfect path is an arrow or at most
// the square of a loop.  Requires special multiserial + UMP; throws
// HypothesisError otherwise.
StableCategoryVerdict stable_category_shape(const MonomialAlgebra& algebra);

struct SyzygyViolation {
  Path path;
  bool left_side = false;
  int cover = 0;   // dim of the covering projective
  int pieces = 0;  // dim of the module plus its kernel summands
};

// Checks dim Ae_{s(p)} = dim Ap + sum of dim Aq over q in L(p) for every
// catalog path, and the mirror identity with R(p); empty result means pass.
std::vector<SyzygyViolation> syzygy_audit(const MonomialAlgebra& algebra);

// True when p is an arrow, or a power of a cycle u with u^(l) a relation for
// some l >= 2 and no relation of the form (arrow)·u_first or u_last·(arrow).
bool perfect_path_matches_structure(const MonomialAlgebra& algebra, const Path& p);

}  // namespace quivalg
