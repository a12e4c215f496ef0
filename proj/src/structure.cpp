#include "quivalg/structure.hpp"

#include <algorithm>
#include <set>

#include "quivalg/errors.hpp"

namespace quivalg {

std::vector<Path> MaximalPathSet::paths() const {
  std::vector<Path> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.path);
  return out;
}

MaximalPathSet maximal_paths(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  MaximalPathSet result;
  for (const Path& p : algebra.catalog().paths) {
    MaximalPathEntry entry{p, {}, {}};
    bool maximal = true;
    for (int arrow : quiver.out_arrows(p.target(quiver))) {
      Path extended = compose(quiver, p, Path::of(quiver, {arrow}));
      if (!algebra.is_zero(extended)) {
        maximal = false;
        break;
      }
      entry.right_blocks.emplace_back(arrow, algebra.dividing_relation(extended));
    }
    if (!maximal) continue;
    for (int arrow : quiver.in_arrows(p.source(quiver))) {
      Path extended = compose(quiver, Path::of(quiver, {arrow}), p);
      if (!algebra.is_zero(extended)) {
        maximal = false;
        break;
      }
      entry.left_blocks.emplace_back(arrow, algebra.dividing_relation(extended));
    }
    if (maximal) result.entries.push_back(std::move(entry));
  }
  return result;
}

UmpVerdict is_ump(const MonomialAlgebra& algebra) {
  MaximalPathSet maximal = maximal_paths(algebra);
  std::vector<std::set<int>> arrow_sets;
  arrow_sets.reserve(maximal.entries.size());
  for (const auto& e : maximal.entries) {
    arrow_sets.emplace_back(e.path.arrows().begin(), e.path.arrows().end());
  }
  for (size_t i = 0; i < arrow_sets.size(); ++i) {
    for (size_t j = i + 1; j < arrow_sets.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(arrow_sets[i].begin(), arrow_sets[i].end(), arrow_sets[j].begin(), arrow_sets[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        UmpVerdict verdict;
        verdict.holds = false;
        verdict.witness = UmpWitness{maximal.entries[i].path, maximal.entries[j].path, shared.front()};
        return verdict;
      }
    }
  }
  return UmpVerdict{true, std::nullopt};
}

MultiserialVerdict is_special_multiserial(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  for (int arrow = 0; arrow < quiver.arrow_count(); ++arrow) {
    std::vector<int> continuations;
    for (int next : quiver.out_arrows(quiver.target_of(arrow))) {
      if (!algebra.is_zero(Path::of(quiver, {arrow, next}))) continuations.push_back(next);
    }
    if (continuations.size() > 1) {
      return {false, MultiserialWitness{arrow, true, std::move(continuations)}};
    }
    std::vector<int> predecessors;
    for (int prev : quiver.in_arrows(quiver.source_of(arrow))) {
      if (!algebra.is_zero(Path::of(quiver, {prev, arrow}))) predecessors.push_back(prev);
    }
    if (predecessors.size() > 1) {
      return {false, MultiserialWitness{arrow, false, std::move(predecessors)}};
    }
  }
  return {true, std::nullopt};
}

bool is_quadratic(const MonomialAlgebra& algebra) {
  for (const Path& r : algebra.relations()) {
    if (r.length() != 2) return false;
  }
  return true;
}

namespace {

// The unique nonzero continuation of an arrow, or -1.  Only meaningful for
// special multiserial algebras, where there is at most one.
int unique_continuation(const MonomialAlgebra& algebra, int arrow) {
  const Quiver& quiver = algebra.quiver();
  for (int next : quiver.out_arrows(quiver.target_of(arrow))) {
    if (!algebra.is_zero(Path::of(quiver, {arrow, next}))) return next;
  }
  return -1;
}

Path repeat_cycle(const Quiver& quiver, const Path& cycle, int times) {
  std::vector<int> arrows;
  arrows.reserve(static_cast<size_t>(cycle.length()) * times);
  for (int k = 0; k < times; ++k) {
    arrows.insert(arrows.end(), cycle.arrows().begin(), cycle.arrows().end());
  }
  return Path::of(quiver, std::move(arrows));
}

}  // namespace

CriterionVerdict ump_criterion(const MonomialAlgebra& algebra) {
  MultiserialVerdict serial = is_special_multiserial(algebra);
  if (!serial.holds) {
    throw HypothesisError("ump_criterion requires a special multiserial algebra");
  }
  const Quiver& quiver = algebra.quiver();

  CriterionVerdict verdict;
  verdict.holds = true;
  for (const Path& r : algebra.relations()) {
    if (r.length() <= 2) continue;
    CriterionEntry entry{r, false, std::nullopt};

    // Any candidate cycle must contain every arrow of r and, read cyclically,
    // follow unique nonzero continuations (its two-arrow windows are nonzero
    // and the algebra is special multiserial).  Rotating it to start at r's
    // first arrow keeps the set of relations dividing its powers, so the only
    // candidate is the continuation orbit of that arrow — if it closes up.
    int start = r.arrow_at(0);
    std::vector<int> orbit{start};
    std::vector<bool> seen(quiver.arrow_count(), false);
    seen[start] = true;
    std::optional<Path> cycle;
    for (int at = start;;) {
      int next = unique_continuation(algebra, at);
      if (next < 0) break;
      if (next == start) {
        cycle = Path::of(quiver, orbit);
        break;
      }
      if (seen[next]) break;  // orbit closes elsewhere; no cycle through start
      seen[next] = true;
      orbit.push_back(next);
      at = next;
    }

    if (cycle) {
      // A relation divides some power of the cycle iff it divides the power
      // just long enough to hold it starting anywhere in the first lap.
      bool only_r = true;
      for (const Path& other : algebra.relations()) {
        int times = (other.length() + cycle->length() - 1) / cycle->length() + 1;
        bool occurs = divides(other, repeat_cycle(quiver, *cycle, times));
        if (occurs != (other == r)) {
          only_r = false;
          break;
        }
      }
      if (only_r) {
        entry.satisfied = true;
        entry.cycle = cycle;
      }
    }

    if (!entry.satisfied) verdict.holds = false;
    verdict.entries.push_back(std::move(entry));
  }
  return verdict;
}

namespace {

bool has_directed_cycle(const Quiver& quiver) {
  std::vector<int> indegree(quiver.vertex_count());
  for (int v = 0; v < quiver.vertex_count(); ++v) indegree[v] = static_cast<int>(quiver.in_arrows(v).size());
  std::vector<int> ready;
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int arrow : quiver.out_arrows(v)) {
      if (--indegree[quiver.target_of(arrow)] == 0) ready.push_back(quiver.target_of(arrow));
    }
  }
  return removed != quiver.vertex_count();
}

}  // namespace

NakayamaClassification classify_nakayama(const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  NakayamaClassification result;
  if (!quiver.is_weakly_connected()) return result;
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    if (quiver.out_arrows(v).size() > 1 || quiver.in_arrows(v).size() > 1) return result;
  }
  if (!has_directed_cycle(quiver)) {
    result.tag = NakayamaTag::kLinear;
    return result;
  }

  // Degrees at most one, connected, and a directed cycle: the quiver is a
  // single oriented cycle.
  std::optional<Path> cycle = cyclic_quiver_cycle(quiver);
  if (!cycle) throw AuditError("connected quiver with unit degrees and a cycle must be an oriented cycle");
  result.tag = NakayamaTag::kCyclicOther;
  int n = cycle->length();

  const std::vector<Path>& relations = algebra.relations();
  if (static_cast<int>(relations.size()) != n || relations.empty()) return result;
  int len = relations.front().length();
  for (const Path& r : relations) {
    if (r.length() != len) return result;
  }
  std::set<Path> expected;
  for (int offset = 0; offset < n; ++offset) {
    std::vector<int> arrows;
    arrows.reserve(len);
    for (int j = 0; j < len; ++j) arrows.push_back(cycle->arrow_at((offset + j) % n));
    expected.insert(Path::of(quiver, std::move(arrows)));
  }
  if (std::set<Path>(relations.begin(), relations.end()) != expected) return result;

  result.tag = NakayamaTag::kSelfinjective;
  result.n = n;
  result.m = len - 1;
  // Maximal paths are the n windows of length m; for n >= 2 neighbouring
  // windows overlap unless m == 1, and the loop with a single window is
  // always serial.
  result.ump = (result.m == 1 || result.n == 1);
  return result;
}

const char* nakayama_tag_name(NakayamaTag tag) {
  switch (tag) {
    case NakayamaTag::kNotNakayama: return "not_nakayama";
    case NakayamaTag::kLinear: return "linear_nakayama";
    case NakayamaTag::kSelfinjective: return "selfinjective";
    case NakayamaTag::kCyclicOther: return "cyclic_nakayama_other";
  }
  return "not_nakayama";
}

}  // namespace quivalg
