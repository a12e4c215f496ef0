#include "quivalg/dotexport.hpp"

#include <queue>
#include <sstream>
#include <vector>

#include "quivalg/homology.hpp"
#include "quivalg/ramifications.hpp"

namespace quivalg {

namespace {

// node names per component, plus directed edges as index pairs
struct GraphView {
  std::string title;
  std::vector<std::string> nodes;
  std::vector<std::vector<int>> components;
  std::vector<std::pair<int, int>> edges;
};

std::vector<std::vector<int>> weak_components(int count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> neighbours(count);
  for (const auto& [from, to] : edges) {
    neighbours[from].push_back(to);
    neighbours[to].push_back(from);
  }
  std::vector<int> component_of(count, -1);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < count; ++start) {
    if (component_of[start] >= 0) continue;
    components.emplace_back();
    std::queue<int> queue;
    queue.push(start);
    component_of[start] = static_cast<int>(components.size()) - 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      components.back().push_back(v);
      for (int w : neighbours[v]) {
        if (component_of[w] < 0) {
          component_of[w] = component_of[v];
          queue.push(w);
        }
      }
    }
  }
  return components;
}

GraphView quiver_view(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  GraphView view;
  view.title = "quiver";
  view.nodes = quiver.vertex_ids();
  for (int a = 0; a < quiver.arrow_count(); ++a) view.edges.emplace_back(quiver.source_of(a), quiver.target_of(a));
  view.components = weak_components(quiver.vertex_count(), view.edges);
  return view;
}

GraphView ramifications_view(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  RamificationsGraph graph = ramifications_graph(algebra);
  GraphView view;
  view.title = "ramifications";
  for (const Path& omega : graph.vertices) view.nodes.push_back(omega.render(quiver));
  view.components = graph.components;
  view.edges = graph.edges;
  return view;
}

GraphView relations_view(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  RelationsQuiver graph = relations_quiver(algebra);
  GraphView view;
  view.title = "relations";
  for (const Path& p : graph.vertices) view.nodes.push_back(p.render(quiver));
  view.components = graph.components;
  view.edges = graph.arrows;
  return view;
}

}  // namespace

std::optional<GraphKind> graph_kind_from_name(const std::string& name) {
  if (name == "quiver") return GraphKind::kQuiver;
  if (name == "ramifications") return GraphKind::kRamifications;
  if (name == "relations") return GraphKind::kRelations;
  return std::nullopt;
}

std::string export_dot(const MonomialAlgebra& algebra, GraphKind kind) {
  GraphView view;
  switch (kind) {
    case GraphKind::kQuiver: view = quiver_view(algebra); break;
    case GraphKind::kRamifications: view = ramifications_view(algebra); break;
    case GraphKind::kRelations: view = relations_view(algebra); break;
  }

  std::ostringstream out;
  out << "digraph " << view.title << " {\n";
  for (size_t c = 0; c < view.components.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"component " << c << "\";\n";
    for (int v : view.components[c]) out << "    \"" << view.nodes[v] << "\";\n";
    out << "  }\n";
  }
  if (kind == GraphKind::kQuiver) {
    const Quiver& quiver = algebra.quiver();
    for (int a = 0; a < quiver.arrow_count(); ++a) {
      out << "  \"" << view.nodes[quiver.source_of(a)] << "\" -> \"" << view.nodes[quiver.target_of(a)]
          << "\" [label=\"" << quiver.arrow(a).id << "\"];\n";
    }
  } else {
    for (const auto& [from, to] : view.edges) {
      out << "  \"" << view.nodes[from] << "\" -> \"" << view.nodes[to] << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace quivalg
