#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quivalg/structure.hpp"

namespace quivalg {

// The largest path through `arrow` whose internal vertices all have in- and
// out-degree one.  On an oriented-cycle quiver every arrow yields the same
// fixed covering cycle.  Depends on the quiver only, never on relations.
Path omega_path(const Quiver& quiver, int arrow);

struct RamificationsGraph {
  std::vector<Path> omega_of;                // indexed by arrow
  std::vector<Path> vertices;                // distinct omega paths, sorted
  std::vector<std::pair<int, int>> edges;    // vertex index pairs, sorted
  std::vector<std::vector<int>> components;  // sorted partition of vertex indices
  std::vector<int> component_of;             // indexed by vertex

  int vertex_index(const Path& omega) const;
};

// Vertices are the distinct omega paths; there is an edge from w to w' when
// they differ, t(w) = s(w'), and the last arrow of w composed with the first
// arrow of w' is nonzero.  Throws HypothesisError on a disconnected quiver.
RamificationsGraph ramifications_graph(const MonomialAlgebra& algebra);

struct InducedComponentAlgebra {
  int component = 0;
  std::vector<int> parent_arrows;  // ascending arrow indices of the parent quiver
  MonomialAlgebra algebra;
  MaximalPathSet maximal;

  Path lift_to(const Quiver& parent, const Path& p) const;
};

// Restriction of the algebra to the arrows whose omega paths lie in one
// weak component; its relations are the parent relations supported there.
InducedComponentAlgebra induced_component_algebra(const MonomialAlgebra& algebra, const RamificationsGraph& graph,
                                                  int component);

struct MaximalDecomposition {
  MaximalPathSet full;
  RamificationsGraph graph;
  std::vector<InducedComponentAlgebra> components;
  std::vector<int> assignment;  // component index per entry of `full`
};

// Computes the maximal paths of the algebra and of every component algebra
// and checks that the components partition them; AuditError on mismatch.
MaximalDecomposition decompose_maximal_paths(const MonomialAlgebra& algebra);

struct UnilateralVerdict {
  bool holds = false;
  std::optional<std::pair<Path, Path>> witness;  // mutually unreachable vertices
};

// Every pair of component vertices is joined by a directed path one way or
// the other.
UnilateralVerdict is_unilaterally_connected(const RamificationsGraph& graph, int component);

enum class ComponentShape { kNakayamaPath, kNakayamaCycle, kOther };

struct ComponentShapeInfo {
  ComponentShape shape = ComponentShape::kOther;
  std::vector<bool> vertex_is_cycle;  // per component member, in component order
};

ComponentShapeInfo component_shape(const Quiver& quiver, const RamificationsGraph& graph, int component);

const char* component_shape_name(ComponentShape shape);

}  // namespace quivalg
