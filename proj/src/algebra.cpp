#include "quivalg/algebra.hpp"

#include <algorithm>
#include <utility>

#include "quivalg/errors.hpp"

namespace quivalg {

namespace {

void validate_relation(const Quiver& quiver, const Path& r) {
  if (r.is_trivial()) throw RelationError("a relation must be a nontrivial path");
  for (int i = 0; i < r.length(); ++i) {
    int a = r.arrow_at(i);
    if (a < 0 || a >= quiver.arrow_count()) throw RelationError("relation refers to an arrow outside the quiver");
    if (i > 0 && quiver.target_of(r.arrow_at(i - 1)) != quiver.source_of(a)) {
      throw RelationError("relation " + r.render(quiver) + " is not a composable path");
    }
  }
  if (r.length() < 2) throw RelationError("relation " + r.render(quiver) + " must have at least two arrows");
}

}  // namespace

NormalizeResult normalize_relations(const Quiver& quiver, std::vector<Path> relations) {
  for (const auto& r : relations) validate_relation(quiver, r);
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

  NormalizeResult result;
  for (const auto& r : relations) {
    bool redundant = false;
    for (const auto& other : relations) {
      if (other != r && divides(other, r)) {
        redundant = true;
        break;
      }
    }
    (redundant ? result.removed : result.kept).push_back(r);
  }
  return result;
}

MonomialAlgebra::MonomialAlgebra(Quiver quiver, std::vector<Path> relations)
    : quiver_(std::move(quiver)), matcher_(0, {}), catalog_state_(std::make_shared<CatalogState>()) {
  NormalizeResult normalized = normalize_relations(quiver_, std::move(relations));
  relations_ = std::move(normalized.kept);
  removed_ = std::move(normalized.removed);

  std::vector<std::vector<int>> patterns;
  patterns.reserve(relations_.size());
  for (const auto& r : relations_) patterns.push_back(r.arrows());
  matcher_ = FactorMatcher(quiver_.arrow_count(), patterns);

  check_admissibility();
}

bool MonomialAlgebra::is_zero(const Path& p) const {
  if (p.is_trivial()) return false;
  for (int a : p.arrows()) {
    if (a < 0 || a >= quiver_.arrow_count()) throw Error("path refers to an arrow outside the quiver");
  }
  return matcher_.has_factor(p.arrows());
}

int MonomialAlgebra::dividing_relation(const Path& p) const {
  if (p.is_trivial()) return -1;
  for (int i = 0; i < static_cast<int>(relations_.size()); ++i) {
    if (divides(relations_[i], p)) return i;
  }
  return -1;
}

void MonomialAlgebra::check_admissibility() {
  // Nonzero paths are walks in the product of the quiver with the matcher
  // that avoid dead states; arbitrarily long ones exist exactly when that
  // product has a cycle.  Any such cycle reads off a cyclic path whose
  // powers all avoid the relations.
  const int states = matcher_.state_count();
  auto node_of = [states](int vertex, int state) { return vertex * states + state; };

  std::vector<char> color(static_cast<size_t>(quiver_.vertex_count()) * states, 0);
  struct Frame {
    int node;
    size_t edge_pos;
    int in_arrow;
  };
  std::vector<Frame> stack;

  for (int root = 0; root < static_cast<int>(color.size()); ++root) {
    if (color[root] != 0 || matcher_.dead(root % states)) continue;
    color[root] = 1;
    stack.push_back({root, 0, -1});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      int vertex = frame.node / states;
      int state = frame.node % states;
      const std::vector<int>& outs = quiver_.out_arrows(vertex);
      if (frame.edge_pos < outs.size()) {
        int arrow = outs[frame.edge_pos++];
        int next_state = matcher_.step(state, arrow);
        if (matcher_.dead(next_state)) continue;
        int next = node_of(quiver_.target_of(arrow), next_state);
        if (color[next] == 0) {
          color[next] = 1;
          stack.push_back({next, 0, arrow});
        } else if (color[next] == 1) {
          size_t begin = stack.size();
          while (stack[begin - 1].node != next) --begin;
          std::vector<int> cycle;
          for (size_t i = begin; i < stack.size(); ++i) cycle.push_back(stack[i].in_arrow);
          cycle.push_back(arrow);
          violation_ = AdmissibilityViolation{Path::of(quiver_, std::move(cycle))};
          return;
        }
      } else {
        color[frame.node] = 2;
        stack.pop_back();
      }
    }
  }
}

void MonomialAlgebra::build_catalog(Catalog& out) const {
  // Depth-first by first arrow with children in arrow order; pre-order
  // emission lists the paths lexicographically.
  std::vector<int> arrows;
  struct Frame {
    int state;
    size_t edge_pos;
  };
  std::vector<Frame> stack;

  for (int first = 0; first < quiver_.arrow_count(); ++first) {
    int state = matcher_.step(matcher_.root(), first);
    if (matcher_.dead(state)) continue;
    arrows.assign(1, first);
    out.paths.push_back(Path::of(quiver_, arrows));
    stack.push_back({state, 0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const std::vector<int>& outs = quiver_.out_arrows(quiver_.target_of(arrows.back()));
      if (frame.edge_pos < outs.size()) {
        int arrow = outs[frame.edge_pos++];
        int next_state = matcher_.step(frame.state, arrow);
        if (matcher_.dead(next_state)) continue;
        arrows.push_back(arrow);
        out.paths.push_back(Path::of(quiver_, arrows));
        stack.push_back({next_state, 0});
      } else {
        stack.pop_back();
        arrows.pop_back();
      }
    }
  }

  out.from.assign(quiver_.vertex_count(), {});
  out.into.assign(quiver_.vertex_count(), {});
  for (int i = 0; i < static_cast<int>(out.paths.size()); ++i) {
    out.from[out.paths[i].source(quiver_)].push_back(i);
    out.into[out.paths[i].target(quiver_)].push_back(i);
    out.index[out.paths[i]] = i;
  }
}

const Catalog& MonomialAlgebra::catalog() const {
  if (violation_) {
    throw AdmissibilityError("the algebra is infinite-dimensional: every power of " +
                             violation_->witness_cycle.render(quiver_) + " is nonzero");
  }
  std::call_once(catalog_state_->once, [&] { build_catalog(catalog_state_->catalog); });
  return catalog_state_->catalog;
}

int MonomialAlgebra::dimension() const {
  return quiver_.vertex_count() + static_cast<int>(catalog().paths.size());
}

}  // namespace quivalg
