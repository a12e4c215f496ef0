#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quivalg/errors.hpp"

namespace quivalg {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A finite quiver (directed multigraph).  Vertices and arrows are stored
// sorted by id, so indices give a stable lexicographic order and path
// comparison can work on index sequences directly.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // -1 when absent.
  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;

  int source_of(int arrow) const { return sources_[arrow]; }
  int target_of(int arrow) const { return targets_[arrow]; }

  // Arrow indices leaving / entering a vertex, ascending.
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }

  bool is_weakly_connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> sources_;
  std::vector<int> targets_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

// A path in a fixed quiver: either a trivial path at a vertex or a
// composable sequence of arrow indices.  Paths order lexicographically by
// their arrow sequence (trivial paths first, by vertex), which matches the
// catalog order used throughout.
class Path {
 public:
  static Path trivial(int vertex);
  static Path of(const Quiver& q, std::vector<int> arrows);
  static Path of_ids(const Quiver& q, const std::vector<std::string>& ids);

  bool is_trivial() const { return arrows_.empty(); }
  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& arrows() const { return arrows_; }
  int arrow_at(int i) const { return arrows_[i]; }

  int source(const Quiver& q) const { return is_trivial() ? vertex_ : q.source_of(arrows_.front()); }
  int target(const Quiver& q) const { return is_trivial() ? vertex_ : q.target_of(arrows_.back()); }

  // Contiguous subpath [begin, begin+count).  count >= 1.
  Path subpath(int begin, int count) const;
  Path prefix(int count) const { return subpath(0, count); }
  Path suffix(int count) const { return subpath(length() - count, count); }

  std::string render(const Quiver& q) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.arrows_ == b.arrows_ && a.vertex_ == b.vertex_;
  }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (a.arrows_.empty() != b.arrows_.empty()) return a.arrows_.empty() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.arrows_.empty()) return a.vertex_ <=> b.vertex_;
    return a.arrows_ <=> b.arrows_;
  }

 private:
  Path() = default;
  std::vector<int> arrows_;
  int vertex_ = -1;  // set only for trivial paths
};

// Composition u followed by v; throws EndpointMismatchError if t(u) != s(v).
Path compose(const Quiver& q, const Path& u, const Path& v);

// All offsets at which the nontrivial path u occurs as a contiguous factor
// of v.  Offsets count arrows from the start of v.
std::vector<int> divisor_offsets(const Path& u, const Path& v);
bool divides(const Path& u, const Path& v);

// (arrows leaving v, arrows entering v), both ascending.
std::pair<std::vector<int>, std::vector<int>> arrow_stars(const Quiver& q, int vertex);

// If the whole quiver is a single oriented cycle, the covering cycle
// starting at the lexicographically smallest arrow; otherwise nothing.
std::optional<Path> cyclic_quiver_cycle(const Quiver& q);

}  // namespace quivalg
