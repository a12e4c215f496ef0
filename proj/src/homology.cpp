#include "quivalg/homology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "quivalg/errors.hpp"

namespace quivalg {

MinimalKillerSets minimal_killers(const MonomialAlgebra& algebra, const Path& p) {
  if (algebra.is_zero(p)) throw Error("minimal killers are only defined for nonzero paths");
  const Quiver& quiver = algebra.quiver();
  const Catalog& catalog = algebra.catalog();
  MinimalKillerSets result;

  for (int i : catalog.from[p.target(quiver)]) {
    const Path& q = catalog.paths[i];
    if (!algebra.is_zero(compose(quiver, p, q))) continue;
    bool minimal = true;
    for (int len = 1; len < q.length() && minimal; ++len) {
      if (algebra.is_zero(compose(quiver, p, q.prefix(len)))) minimal = false;
    }
    if (minimal) result.right.push_back(q);
  }
  for (int i : catalog.into[p.source(quiver)]) {
    const Path& q = catalog.paths[i];
    if (!algebra.is_zero(compose(quiver, q, p))) continue;
    bool minimal = true;
    for (int len = 1; len < q.length() && minimal; ++len) {
      if (algebra.is_zero(compose(quiver, q.suffix(len), p))) minimal = false;
    }
    if (minimal) result.left.push_back(q);
  }
  return result;
}

PerfectPairVerdict is_perfect_pair(const MonomialAlgebra& algebra, const Path& p, const Path& q) {
  const Quiver& quiver = algebra.quiver();
  if (p.is_trivial() || q.is_trivial() || p.target(quiver) != q.source(quiver) ||
      !algebra.is_zero(compose(quiver, p, q))) {
    return {false, PerfectPairFailure::kP1};
  }
  MinimalKillerSets of_p = minimal_killers(algebra, p);
  if (of_p.right.size() != 1 || of_p.right.front() != q) return {false, PerfectPairFailure::kP2};
  MinimalKillerSets of_q = minimal_killers(algebra, q);
  if (of_q.left.size() != 1 || of_q.left.front() != p) return {false, PerfectPairFailure::kP3};
  return {true, PerfectPairFailure::kNone};
}

PerfectStructure perfect_paths(const MonomialAlgebra& algebra) {
  const Catalog& catalog = algebra.catalog();
  const int n = static_cast<int>(catalog.paths.size());

  std::vector<MinimalKillerSets> killers;
  killers.reserve(n);
  for (const Path& p : catalog.paths) killers.push_back(minimal_killers(algebra, p));

  // P2 forces the successor; P3 confirms the pair.
  std::vector<int> succ(n, -1);
  for (int i = 0; i < n; ++i) {
    if (killers[i].right.size() != 1) continue;
    const Path& q = killers[i].right.front();
    auto it = catalog.index.find(q);
    if (it == catalog.index.end()) continue;
    const auto& left = killers[it->second].left;
    if (left.size() == 1 && left.front() == catalog.paths[i]) succ[i] = it->second;
  }

  PerfectStructure result;
  for (int i = 0; i < n; ++i) {
    if (succ[i] >= 0) result.pairs.emplace_back(catalog.paths[i], catalog.paths[succ[i]]);
  }

  std::vector<char> color(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    std::vector<int> walk;
    int at = start;
    while (at >= 0 && color[at] == 0) {
      color[at] = 1;
      walk.push_back(at);
      at = succ[at];
    }
    if (at >= 0 && color[at] == 1) {
      auto it = std::find(walk.begin(), walk.end(), at);
      cycles.emplace_back(it, walk.end());
    }
    for (int v : walk) color[v] = 2;
  }

  std::vector<int> members;
  for (auto& cycle : cycles) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    members.insert(members.end(), cycle.begin(), cycle.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  for (const auto& cycle : cycles) {
    std::vector<Path> paths;
    paths.reserve(cycle.size());
    for (int v : cycle) paths.push_back(catalog.paths[v]);
    result.relation_cycles.push_back(std::move(paths));
  }
  std::sort(members.begin(), members.end());
  for (int v : members) result.paths.push_back(catalog.paths[v]);
  return result;
}

const char* component_class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::kPerfect: return "perfect";
    case ComponentClass::kAcyclic: return "acyclic";
    case ComponentClass::kMixed: return "mixed";
  }
  return "mixed";
}

int RelationsQuiver::vertex_index(const Path& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return -1;
  return static_cast<int>(it - vertices.begin());
}

ComponentClassification classify_components(const RelationsQuiver& quiver) {
  const int n = static_cast<int>(quiver.vertices.size());
  std::vector<int> indegree(n, 0), outdegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& [from, to] : quiver.arrows) {
    ++outdegree[from];
    ++indegree[to];
    succ[from].push_back(to);
  }

  ComponentClassification result;
  std::vector<bool> component_acyclic(quiver.components.size(), false);
  for (const auto& component : quiver.components) {
    bool unit = true;
    for (int v : component) {
      if (indegree[v] != 1 || outdegree[v] != 1) unit = false;
    }
    // Kahn's algorithm within the component.
    std::map<int, int> pending;
    for (int v : component) pending[v] = indegree[v];
    std::vector<int> ready;
    for (int v : component) {
      if (pending[v] == 0) ready.push_back(v);
    }
    size_t removed = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++removed;
      for (int w : succ[v]) {
        if (--pending[w] == 0) ready.push_back(w);
      }
    }
    bool acyclic = removed == component.size();
    component_acyclic[result.classes.size()] = acyclic;
    if (unit) {
      result.classes.push_back(ComponentClass::kPerfect);
    } else if (acyclic) {
      result.classes.push_back(ComponentClass::kAcyclic);
    } else {
      result.classes.push_back(ComponentClass::kMixed);
    }
  }

  // A vertex is bounded when no directed cycle is reachable from it: peel
  // vertices without outgoing arrows; whatever survives reaches a cycle.
  std::vector<int> remaining_out = outdegree;
  std::vector<std::vector<int>> pred(n);
  for (const auto& [from, to] : quiver.arrows) pred[to].push_back(from);
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (remaining_out[v] == 0) ready.push_back(v);
  }
  result.bounded.assign(n, false);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    result.bounded[v] = true;
    for (int w : pred[v]) {
      if (--remaining_out[w] == 0) ready.push_back(w);
    }
  }

  // Longest directed path over the acyclic components.
  std::vector<int> depth(n, -1);
  auto longest = [&](auto&& self, int v) -> int {
    if (depth[v] >= 0) return depth[v];
    int best = 0;
    for (int w : succ[v]) best = std::max(best, self(self, w) + 1);
    return depth[v] = best;
  };
  result.d = 0;
  for (size_t c = 0; c < quiver.components.size(); ++c) {
    if (!component_acyclic[c]) continue;
    for (int v : quiver.components[c]) result.d = std::max(result.d, longest(longest, v));
  }
  return result;
}

RelationsQuiver relations_quiver(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  RelationsQuiver result;

  std::set<Path> vertex_set;
  for (const Path& r : algebra.relations()) {
    for (int len = 1; len < r.length(); ++len) {
      vertex_set.insert(r.prefix(len));
      vertex_set.insert(r.suffix(len));
    }
  }
  for (int a = 0; a < quiver.arrow_count(); ++a) vertex_set.insert(Path::of(quiver, {a}));
  result.vertices.assign(vertex_set.begin(), vertex_set.end());

  const int n = static_cast<int>(result.vertices.size());
  for (int qi = 0; qi < n; ++qi) {
    for (const Path& p : minimal_killers(algebra, result.vertices[qi]).left) {
      int pi = result.vertex_index(p);
      if (pi < 0) throw AuditError("left-minimal killer " + p.render(quiver) + " is not a relation prefix");
      result.arrows.emplace_back(qi, pi);
    }
  }
  std::sort(result.arrows.begin(), result.arrows.end());

  std::vector<std::vector<int>> neighbours(n);
  for (const auto& [from, to] : result.arrows) {
    neighbours[from].push_back(to);
    neighbours[to].push_back(from);
  }
  result.component_of.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (result.component_of[start] >= 0) continue;
    int id = static_cast<int>(result.components.size());
    result.components.emplace_back();
    std::queue<int> queue;
    queue.push(start);
    result.component_of[start] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      result.components[id].push_back(v);
      for (int w : neighbours[v]) {
        if (result.component_of[w] < 0) {
          result.component_of[w] = id;
          queue.push(w);
        }
      }
    }
    std::sort(result.components[id].begin(), result.components[id].end());
  }

  ComponentClassification classification = classify_components(result);
  result.classes = std::move(classification.classes);
  result.bounded = std::move(classification.bounded);
  result.d = classification.d;
  return result;
}

namespace {

int pd_recurse(const MonomialAlgebra& algebra, const Path& p, std::map<Path, int>& memo, std::set<Path>& gray) {
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  if (gray.count(p)) return kInfiniteDimension;  // on a killer cycle
  gray.insert(p);
  int result = 0;
  for (const Path& q : minimal_killers(algebra, p).left) {
    int sub = pd_recurse(algebra, q, memo, gray);
    if (sub == kInfiniteDimension) {
      result = kInfiniteDimension;
      break;
    }
    result = std::max(result, sub + 1);
  }
  gray.erase(p);
  memo[p] = result;
  return result;
}

}  // namespace

int projective_dimension(const MonomialAlgebra& algebra, const Path& p) {
  if (algebra.is_zero(p)) throw Error("projective dimension is only defined for nonzero paths");
  std::map<Path, int> memo;
  std::set<Path> gray;
  return pd_recurse(algebra, p, memo, gray);
}

HomologicalReport homological_report(const MonomialAlgebra& algebra) {
  HomologicalReport report;
  report.perfect = perfect_paths(algebra);
  report.cm_free = report.perfect.paths.empty();
  report.relations = relations_quiver(algebra);

  bool any_perfect_component = false;
  bool any_mixed = false;
  bool all_acyclic = true;
  for (ComponentClass c : report.relations.classes) {
    if (c == ComponentClass::kPerfect) any_perfect_component = true;
    if (c == ComponentClass::kMixed) any_mixed = true;
    if (c != ComponentClass::kAcyclic) all_acyclic = false;
  }
  report.component_criterion_cm_free = !any_perfect_component;
  report.cm_criteria_agree = report.component_criterion_cm_free == report.cm_free;

  MultiserialVerdict serial = is_special_multiserial(algebra);
  if (!serial.holds) {
    report.gorenstein.failed_hypothesis = "special_multiserial";
    report.finite_global_dimension.failed_hypothesis = "special_multiserial";
    return report;
  }
  UmpVerdict ump = is_ump(algebra);
  if (!ump.holds) {
    report.gorenstein.failed_hypothesis = "ump";
    report.finite_global_dimension.failed_hypothesis = "ump";
    return report;
  }
  report.gorenstein.applicable = true;
  report.gorenstein.holds = !any_mixed;
  if (report.gorenstein.holds) report.gorenstein.bound = report.relations.d + 2;
  report.finite_global_dimension.applicable = true;
  report.finite_global_dimension.holds = all_acyclic;
  return report;
}

std::vector<OverlapWitness> overlaps(const MonomialAlgebra& algebra, const PerfectStructure& perfect) {
  const Quiver& quiver = algebra.quiver();
  std::vector<OverlapWitness> witnesses;
  for (const Path& p : perfect.paths) {
    for (const Path& q : perfect.paths) {
      bool same = p == q;
      for (int k = 1; k <= std::min(p.length(), q.length()); ++k) {
        if (!(p.suffix(k) == q.prefix(k))) continue;
        bool p_whole = k == p.length();
        bool q_whole = k == q.length();
        if (same && (p_whole || q_whole)) continue;
        std::vector<int> spliced = p.arrows();
        spliced.insert(spliced.end(), q.arrows().begin() + k, q.arrows().end());
        Path joined = Path::of(quiver, std::move(spliced));
        if (algebra.is_zero(joined)) continue;
        OverlapWitness witness{p,
                               q,
                               p.suffix(k),
                               p_whole ? Path::trivial(p.source(quiver)) : p.prefix(p.length() - k),
                               q_whole ? Path::trivial(q.target(quiver)) : q.suffix(q.length() - k),
                               same};
        witnesses.push_back(std::move(witness));
      }
    }
  }
  return witnesses;
}

StableCategoryVerdict stable_category_shape(const MonomialAlgebra& algebra) {
  if (!is_special_multiserial(algebra).holds) {
    throw HypothesisError("stable_category_shape requires a special multiserial algebra");
  }
  if (!is_ump(algebra).holds) {
    throw HypothesisError("stable_category_shape requires pairwise disjoint maximal paths");
  }
  PerfectStructure perfect = perfect_paths(algebra);
  for (const Path& p : perfect.paths) {
    bool allowed = p.length() == 1 || (p.length() == 2 && p.arrow_at(0) == p.arrow_at(1));
    if (!allowed) return {false, {}, p};
  }
  StableCategoryVerdict verdict;
  verdict.equivalence = true;
  for (const auto& cycle : perfect.relation_cycles) verdict.cycle_lengths.push_back(static_cast<int>(cycle.size()));
  std::sort(verdict.cycle_lengths.begin(), verdict.cycle_lengths.end());
  return verdict;
}

namespace {

int dim_left(const MonomialAlgebra& algebra, const Path& x) {
  const Quiver& quiver = algebra.quiver();
  const Catalog& catalog = algebra.catalog();
  int count = 1;  // trivial r
  for (int i : catalog.into[x.source(quiver)]) {
    if (!algebra.is_zero(compose(quiver, catalog.paths[i], x))) ++count;
  }
  return count;
}

int dim_right(const MonomialAlgebra& algebra, const Path& x) {
  const Quiver& quiver = algebra.quiver();
  const Catalog& catalog = algebra.catalog();
  int count = 1;
  for (int i : catalog.from[x.target(quiver)]) {
    if (!algebra.is_zero(compose(quiver, x, catalog.paths[i]))) ++count;
  }
  return count;
}

}  // namespace

std::vector<SyzygyViolation> syzygy_audit(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  const Catalog& catalog = algebra.catalog();
  std::vector<SyzygyViolation> violations;
  for (const Path& p : catalog.paths) {
    MinimalKillerSets killers = minimal_killers(algebra, p);

    int cover = 1 + static_cast<int>(catalog.into[p.source(quiver)].size());
    int pieces = dim_left(algebra, p);
    for (const Path& q : killers.left) pieces += dim_left(algebra, q);
    if (cover != pieces) violations.push_back({p, true, cover, pieces});

    int mirror_cover = 1 + static_cast<int>(catalog.from[p.target(quiver)].size());
    int mirror_pieces = dim_right(algebra, p);
    for (const Path& q : killers.right) mirror_pieces += dim_right(algebra, q);
    if (mirror_cover != mirror_pieces) violations.push_back({p, false, mirror_cover, mirror_pieces});
  }
  return violations;
}

bool perfect_path_matches_structure(const MonomialAlgebra& algebra, const Path& p) {
  if (p.length() == 1) return true;
  const Quiver& quiver = algebra.quiver();
  if (p.is_trivial() || p.source(quiver) != p.target(quiver)) return false;

  std::set<Path> relation_set(algebra.relations().begin(), algebra.relations().end());
  int max_len = 0;
  for (const Path& r : algebra.relations()) max_len = std::max(max_len, r.length());

  for (int d = 1; d <= p.length(); ++d) {
    if (p.length() % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < p.length() && periodic; ++i) {
      if (p.arrow_at(i) != p.arrow_at(i % d)) periodic = false;
    }
    if (!periodic) continue;
    Path u = p.prefix(d);
    if (u.source(quiver) != u.target(quiver)) continue;

    bool has_power_relation = false;
    for (int l = 2; l * d <= max_len && !has_power_relation; ++l) {
      std::vector<int> arrows;
      arrows.reserve(static_cast<size_t>(l) * d);
      for (int k = 0; k < l; ++k) arrows.insert(arrows.end(), u.arrows().begin(), u.arrows().end());
      if (relation_set.count(Path::of(quiver, std::move(arrows)))) has_power_relation = true;
    }
    if (!has_power_relation) continue;

    int first = u.arrow_at(0);
    int last = u.arrow_at(d - 1);
    bool clean = true;
    for (int beta : quiver.in_arrows(quiver.source_of(first))) {
      if (relation_set.count(Path::of(quiver, {beta, first}))) clean = false;
    }
    for (int alpha : quiver.out_arrows(quiver.target_of(last))) {
      if (relation_set.count(Path::of(quiver, {last, alpha}))) clean = false;
    }
    if (clean) return true;
  }
  return false;
}

}  // namespace quivalg
