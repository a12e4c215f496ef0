#ifndef QUIVALG_DOTEXPORT_HPP
#define QUIVALG_DOTEXPORT_HPP

#include <optional>
#include <string>

#include "quivalg/algebra.hpp"

namespace quivalg {

enum class GraphKind { kQuiver, kRamifications, kRelations };

std::optional<GraphKind> graph_kind_from_name(const std::string& name);

// DOT text with deterministic node order and one cluster per weak component.
// Ramifications and relations nodes are labeled by their paths.
std::string export_dot(const MonomialAlgebra& algebra, GraphKind kind);

}  // namespace quivalg

#endif
