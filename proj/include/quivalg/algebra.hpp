#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "quivalg/matcher.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

struct NormalizeResult {
  std::vector<Path> kept;     // minimal generating set, sorted
  std::vector<Path> removed;  // dropped because a distinct kept relation divides them
};

// Deduplicates and drops every relation that has another relation as a
// factor; the kept set generates the same ideal.
NormalizeResult normalize_relations(const Quiver& quiver, std::vector<Path> relations);

struct AdmissibilityViolation {
  Path witness_cycle;  // nonzero cycle all of whose powers stay nonzero
};

struct Catalog {
  std::vector<Path> paths;            // nonzero nontrivial paths in lexicographic order
  std::vector<std::vector<int>> from;  // catalog indices grouped by source vertex
  std::vector<std::vector<int>> into;  // catalog indices grouped by target vertex
  std::map<Path, int> index;

  bool contains(const Path& p) const { return index.count(p) > 0; }
};

// Path algebra of a quiver modulo the ideal generated by a set of paths.
// Relations are normalized at construction and admissibility is checked
// eagerly; the catalog of nonzero paths is built on first use and shared
// between copies.
class MonomialAlgebra {
 public:
  MonomialAlgebra(Quiver quiver, std::vector<Path> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }
  const std::vector<Path>& removed_relations() const { return removed_; }
  const FactorMatcher& matcher() const { return matcher_; }

  bool is_admissible() const { return !violation_.has_value(); }
  const std::optional<AdmissibilityViolation>& admissibility_violation() const { return violation_; }

  // Trivial paths are the nonzero idempotents; a nontrivial path is zero
  // exactly when some relation occurs in it as a factor.
  bool is_zero(const Path& p) const;

  // Index of the first relation dividing p, or -1.
  int dividing_relation(const Path& p) const;

  // Throws AdmissibilityError when the algebra is infinite-dimensional.
  const Catalog& catalog() const;

  int dimension() const;  // trivial paths included

 private:
  void check_admissibility();
  void build_catalog(Catalog& out) const;

  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<Path> removed_;
  FactorMatcher matcher_;
  std::optional<AdmissibilityViolation> violation_;

  struct CatalogState {
    std::once_flag once;
    Catalog catalog;
  };
  std::shared_ptr<CatalogState> catalog_state_;
};

}  // namespace quivalg
