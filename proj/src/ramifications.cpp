#include "quivalg/ramifications.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "quivalg/errors.hpp"

namespace quivalg {

Path omega_path(const Quiver& quiver, int arrow) {
  if (std::optional<Path> cycle = cyclic_quiver_cycle(quiver)) return *cycle;

  auto passthrough = [&](int vertex) {
    return quiver.in_arrows(vertex).size() == 1 && quiver.out_arrows(vertex).size() == 1;
  };
  std::deque<int> arrows{arrow};
  std::vector<bool> used(quiver.arrow_count(), false);
  used[arrow] = true;
  while (passthrough(quiver.source_of(arrows.front()))) {
    int prev = quiver.in_arrows(quiver.source_of(arrows.front()))[0];
    if (used[prev]) throw AuditError("omega extension wrapped around in a non-cycle quiver");
    used[prev] = true;
    arrows.push_front(prev);
  }
  while (passthrough(quiver.target_of(arrows.back()))) {
    int next = quiver.out_arrows(quiver.target_of(arrows.back()))[0];
    if (used[next]) throw AuditError("omega extension wrapped around in a non-cycle quiver");
    used[next] = true;
    arrows.push_back(next);
  }
  return Path::of(quiver, std::vector<int>(arrows.begin(), arrows.end()));
}

int RamificationsGraph::vertex_index(const Path& omega) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), omega);
  if (it == vertices.end() || *it != omega) return -1;
  return static_cast<int>(it - vertices.begin());
}

RamificationsGraph ramifications_graph(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  if (!quiver.is_weakly_connected()) {
    throw HypothesisError("the ramifications graph is only defined for a connected quiver");
  }

  RamificationsGraph graph;
  graph.omega_of.reserve(quiver.arrow_count());
  for (int a = 0; a < quiver.arrow_count(); ++a) graph.omega_of.push_back(omega_path(quiver, a));

  std::set<Path> distinct(graph.omega_of.begin(), graph.omega_of.end());
  graph.vertices.assign(distinct.begin(), distinct.end());

  const int count = static_cast<int>(graph.vertices.size());
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      const Path& a = graph.vertices[i];
      const Path& b = graph.vertices[j];
      if (a.target(quiver) != b.source(quiver)) continue;
      Path junction = Path::of(quiver, {a.arrow_at(a.length() - 1), b.arrow_at(0)});
      if (!algebra.is_zero(junction)) graph.edges.emplace_back(i, j);
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());

  std::vector<std::vector<int>> neighbours(count);
  for (const auto& [from, to] : graph.edges) {
    neighbours[from].push_back(to);
    neighbours[to].push_back(from);
  }
  graph.component_of.assign(count, -1);
  for (int start = 0; start < count; ++start) {
    if (graph.component_of[start] >= 0) continue;
    int id = static_cast<int>(graph.components.size());
    graph.components.emplace_back();
    std::queue<int> queue;
    queue.push(start);
    graph.component_of[start] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      graph.components[id].push_back(v);
      for (int w : neighbours[v]) {
        if (graph.component_of[w] < 0) {
          graph.component_of[w] = id;
          queue.push(w);
        }
      }
    }
    std::sort(graph.components[id].begin(), graph.components[id].end());
  }
  return graph;
}

Path InducedComponentAlgebra::lift_to(const Quiver& parent, const Path& p) const {
  if (p.is_trivial()) {
    return Path::trivial(parent.vertex_index(algebra.quiver().vertex_id(p.source(algebra.quiver()))));
  }
  std::vector<int> arrows;
  arrows.reserve(p.length());
  for (int a : p.arrows()) arrows.push_back(parent_arrows[a]);
  return Path::of(parent, std::move(arrows));
}

InducedComponentAlgebra induced_component_algebra(const MonomialAlgebra& algebra, const RamificationsGraph& graph,
                                                  int component) {
  const Quiver& parent = algebra.quiver();

  std::vector<int> parent_arrows;
  for (int a = 0; a < parent.arrow_count(); ++a) {
    int vertex = graph.vertex_index(graph.omega_of[a]);
    if (vertex >= 0 && graph.component_of[vertex] == component) parent_arrows.push_back(a);
  }

  std::set<std::string> vertex_ids;
  std::vector<Arrow> arrows;
  for (int a : parent_arrows) {
    arrows.push_back(parent.arrow(a));
    vertex_ids.insert(parent.arrow(a).source);
    vertex_ids.insert(parent.arrow(a).target);
  }
  Quiver induced(std::vector<std::string>(vertex_ids.begin(), vertex_ids.end()), std::move(arrows));

  // Parent arrows are id-sorted, so the restriction keeps its order and the
  // induced index of parent_arrows[i] is i.
  std::vector<int> to_induced(parent.arrow_count(), -1);
  for (int i = 0; i < static_cast<int>(parent_arrows.size()); ++i) to_induced[parent_arrows[i]] = i;

  std::vector<Path> relations;
  for (const Path& r : algebra.relations()) {
    std::vector<int> mapped;
    mapped.reserve(r.length());
    bool supported = true;
    for (int a : r.arrows()) {
      if (to_induced[a] < 0) {
        supported = false;
        break;
      }
      mapped.push_back(to_induced[a]);
    }
    if (supported) relations.push_back(Path::of(induced, std::move(mapped)));
  }

  MonomialAlgebra induced_algebra(std::move(induced), std::move(relations));
  if (!induced_algebra.is_admissible()) {
    throw AdmissibilityError("induced component algebra is not admissible");
  }
  MaximalPathSet maximal = maximal_paths(induced_algebra);
  return InducedComponentAlgebra{component, std::move(parent_arrows), std::move(induced_algebra), std::move(maximal)};
}

MaximalDecomposition decompose_maximal_paths(const MonomialAlgebra& algebra) {
  MaximalDecomposition result{maximal_paths(algebra), ramifications_graph(algebra), {}, {}};
  for (int c = 0; c < static_cast<int>(result.graph.components.size()); ++c) {
    result.components.push_back(induced_component_algebra(algebra, result.graph, c));
  }

  std::map<Path, int> owner;
  size_t lifted_total = 0;
  for (int c = 0; c < static_cast<int>(result.components.size()); ++c) {
    for (const auto& entry : result.components[c].maximal.entries) {
      Path lifted = result.components[c].lift_to(algebra.quiver(), entry.path);
      if (!owner.emplace(lifted, c).second) {
        throw AuditError("maximal path " + lifted.render(algebra.quiver()) + " lifted from two components");
      }
      ++lifted_total;
    }
  }
  if (lifted_total != result.full.entries.size()) {
    throw AuditError("component maximal paths do not add up to the full set");
  }
  for (const auto& entry : result.full.entries) {
    auto it = owner.find(entry.path);
    if (it == owner.end()) {
      throw AuditError("maximal path " + entry.path.render(algebra.quiver()) + " not covered by any component");
    }
    result.assignment.push_back(it->second);
  }
  return result;
}

UnilateralVerdict is_unilaterally_connected(const RamificationsGraph& graph, int component) {
  const std::vector<int>& members = graph.components.at(component);
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) local[members[i]] = i;

  const int n = static_cast<int>(members.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> succ(n);
  for (const auto& [from, to] : graph.edges) {
    auto it = local.find(from);
    if (it != local.end() && local.count(to)) succ[it->second].push_back(local[to]);
  }
  for (int s = 0; s < n; ++s) {
    std::queue<int> queue;
    queue.push(s);
    reach[s][s] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : succ[v]) {
        if (!reach[s][w]) {
          reach[s][w] = true;
          queue.push(w);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!reach[i][j] && !reach[j][i]) {
        return {false, std::make_pair(graph.vertices[members[i]], graph.vertices[members[j]])};
      }
    }
  }
  return {true, std::nullopt};
}

ComponentShapeInfo component_shape(const Quiver& quiver, const RamificationsGraph& graph, int component) {
  const std::vector<int>& members = graph.components.at(component);
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) local[members[i]] = i;

  const int n = static_cast<int>(members.size());
  std::vector<int> indegree(n, 0), outdegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& [from, to] : graph.edges) {
    auto it = local.find(from);
    if (it != local.end() && local.count(to)) {
      ++outdegree[it->second];
      ++indegree[local[to]];
      succ[it->second].push_back(local[to]);
    }
  }

  ComponentShapeInfo info;
  for (int member : members) {
    const Path& omega = graph.vertices[member];
    info.vertex_is_cycle.push_back(omega.source(quiver) == omega.target(quiver));
  }

  bool unit_degrees = true;
  bool low_degrees = true;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] > 1 || outdegree[i] > 1) low_degrees = false;
    if (indegree[i] != 1 || outdegree[i] != 1) unit_degrees = false;
  }
  if (!low_degrees) {
    info.shape = ComponentShape::kOther;
    return info;
  }

  // Kahn's algorithm restricted to the component.
  std::vector<int> pending = indegree;
  std::vector<int> ready;
  for (int i = 0; i < n; ++i) {
    if (pending[i] == 0) ready.push_back(i);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : succ[v]) {
      if (--pending[w] == 0) ready.push_back(w);
    }
  }
  bool acyclic = removed == n;

  if (acyclic) {
    info.shape = ComponentShape::kNakayamaPath;
  } else if (unit_degrees) {
    info.shape = ComponentShape::kNakayamaCycle;
  } else {
    info.shape = ComponentShape::kOther;
  }
  return info;
}

const char* component_shape_name(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::kNakayamaPath: return "nakayama_path";
    case ComponentShape::kNakayamaCycle: return "nakayama_cycle";
    case ComponentShape::kOther: return "other";
  }
  return "other";
}

}  // namespace quivalg
