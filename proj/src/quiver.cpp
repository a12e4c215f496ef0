#include "quivalg/quiver.hpp"

#include <algorithm>
#include <queue>

namespace quivalg {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw Error("a quiver needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  for (size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i - 1]) throw Error("duplicate vertex id: " + vertices_[i]);
  }
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) vertex_index_[vertices_[i]] = i;

  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (size_t i = 1; i < arrows_.size(); ++i) {
    if (arrows_[i].id == arrows_[i - 1].id) throw Error("duplicate arrow id: " + arrows_[i].id);
  }

  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  sources_.reserve(arrows_.size());
  targets_.reserve(arrows_.size());
  for (int i = 0; i < static_cast<int>(arrows_.size()); ++i) {
    const Arrow& a = arrows_[i];
    int s = vertex_index(a.source);
    int t = vertex_index(a.target);
    if (s < 0) throw Error("arrow " + a.id + " has unknown source vertex " + a.source);
    if (t < 0) throw Error("arrow " + a.id + " has unknown target vertex " + a.target);
    sources_.push_back(s);
    targets_.push_back(t);
    out_[s].push_back(i);
    in_[t].push_back(i);
    arrow_index_[a.id] = i;
  }
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = arrow_index_.find(id);
  return it == arrow_index_.end() ? -1 : it->second;
}

bool Quiver::is_weakly_connected() const {
  std::vector<bool> seen(vertices_.size(), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    };
    for (int a : out_[v]) visit(targets_[a]);
    for (int a : in_[v]) visit(sources_[a]);
  }
  return reached == vertex_count();
}

Path Path::trivial(int vertex) {
  Path p;
  p.vertex_ = vertex;
  return p;
}

Path Path::of(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty()) throw Error("Path::of needs at least one arrow; use Path::trivial");
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] < 0 || arrows[i] >= q.arrow_count()) throw Error("arrow index out of range");
    if (i > 0 && q.target_of(arrows[i - 1]) != q.source_of(arrows[i])) {
      throw EndpointMismatchError("arrows " + q.arrow(arrows[i - 1]).id + " and " + q.arrow(arrows[i]).id +
                                  " are not composable");
    }
  }
  Path p;
  p.arrows_ = std::move(arrows);
  return p;
}

Path Path::of_ids(const Quiver& q, const std::vector<std::string>& ids) {
  std::vector<int> arrows;
  arrows.reserve(ids.size());
  for (const auto& id : ids) {
    int a = q.arrow_index(id);
    if (a < 0) throw Error("unknown arrow id: " + id);
    arrows.push_back(a);
  }
  return of(q, std::move(arrows));
}

Path Path::subpath(int begin, int count) const {
  if (count < 1 || begin < 0 || begin + count > length()) throw Error("subpath range out of bounds");
  Path p;
  p.arrows_.assign(arrows_.begin() + begin, arrows_.begin() + begin + count);
  return p;
}

std::string Path::render(const Quiver& q) const {
  if (is_trivial()) return "e(" + q.vertex_id(vertex_) + ")";
  std::string out;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(arrows_[i]).id;
  }
  return out;
}

Path compose(const Quiver& q, const Path& u, const Path& v) {
  if (u.target(q) != v.source(q)) {
    throw EndpointMismatchError("cannot compose " + u.render(q) + " with " + v.render(q) + ": endpoints differ");
  }
  if (u.is_trivial()) return v;
  if (v.is_trivial()) return u;
  std::vector<int> arrows = u.arrows();
  arrows.insert(arrows.end(), v.arrows().begin(), v.arrows().end());
  return Path::of(q, std::move(arrows));
}

std::vector<int> divisor_offsets(const Path& u, const Path& v) {
  if (u.is_trivial()) throw Error("divisor must be nontrivial");
  std::vector<int> offsets;
  int n = v.length(), m = u.length();
  for (int o = 0; o + m <= n; ++o) {
    bool match = true;
    for (int i = 0; i < m; ++i) {
      if (v.arrow_at(o + i) != u.arrow_at(i)) {
        match = false;
        break;
      }
    }
    if (match) offsets.push_back(o);
  }
  return offsets;
}

bool divides(const Path& u, const Path& v) { return !divisor_offsets(u, v).empty(); }

std::pair<std::vector<int>, std::vector<int>> arrow_stars(const Quiver& q, int vertex) {
  return {q.out_arrows(vertex), q.in_arrows(vertex)};
}

std::optional<Path> cyclic_quiver_cycle(const Quiver& q) {
  if (q.arrow_count() == 0) return std::nullopt;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() != 1 || q.in_arrows(v).size() != 1) return std::nullopt;
  }
  if (!q.is_weakly_connected()) return std::nullopt;
  std::vector<int> seq{0};
  int start = q.source_of(0);
  int at = q.target_of(0);
  while (at != start) {
    int next = q.out_arrows(at)[0];
    seq.push_back(next);
    at = q.target_of(next);
  }
  if (static_cast<int>(seq.size()) != q.arrow_count()) {
    // in/out degrees all one plus weak connectivity force a single cycle
    throw AuditError("cycle walk failed to cover a connected functional quiver");
  }
  return Path::of(q, std::move(seq));
}

}  // namespace quivalg
