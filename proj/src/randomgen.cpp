#include "quivalg/randomgen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "quivalg/errors.hpp"
#include "quivalg/structure.hpp"

namespace quivalg {

const char* requirement_name(Requirement requirement) {
  switch (requirement) {
    case Requirement::kAny: return "any";
    case Requirement::kQuadratic: return "quadratic";
    case Requirement::kSpecialMultiserial: return "special_multiserial";
    case Requirement::kUmp: return "ump";
  }
  return "any";
}

std::optional<Requirement> requirement_from_name(const std::string& name) {
  if (name == "any") return Requirement::kAny;
  if (name == "quadratic") return Requirement::kQuadratic;
  if (name == "special_multiserial") return Requirement::kSpecialMultiserial;
  if (name == "ump") return Requirement::kUmp;
  return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Raw modulo keeps the stream identical across standard libraries.
int pick(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

std::string arrow_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "a" + std::to_string(index + 1);
}

Path smallest_cyclic_window(const Quiver& quiver, const Path& cycle) {
  std::optional<Path> best;
  for (int i = 0; i < cycle.length(); ++i) {
    Path window = Path::of(quiver, {cycle.arrow_at(i), cycle.arrow_at((i + 1) % cycle.length())});
    if (!best || window < *best) best = window;
  }
  return *best;
}

struct Attempt {
  std::vector<Arrow> arrows;  // generation order, for the document
  Quiver quiver;
  std::vector<std::vector<int>> relations;  // constructor input, duplicates skipped
  std::set<std::vector<int>> seen;

  Attempt(std::vector<std::string> vertices, std::vector<Arrow> generated)
      : arrows(std::move(generated)), quiver(std::move(vertices), arrows) {}

  void add_relation(std::vector<int> arrows_in_order) {
    if (seen.insert(arrows_in_order).second) relations.push_back(std::move(arrows_in_order));
  }

  MonomialAlgebra build() const {
    std::vector<Path> paths;
    paths.reserve(relations.size());
    for (const auto& ids : relations) paths.push_back(Path::of(quiver, ids));
    return MonomialAlgebra(quiver, std::move(paths));
  }
};

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

QuiverDocument random_document(std::uint64_t seed, const RandomParams& params) {
  if (params.vertices < 1 || params.arrows < params.vertices - 1 || params.relation_count < 0 ||
      params.max_relation_length < 2 || params.attempt_cap < 1) {
    throw Error("random generation parameters out of range");
  }

  for (int attempt = 0; attempt < params.attempt_cap; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));

    std::vector<std::string> vertices;
    for (int v = 0; v < params.vertices; ++v) vertices.push_back(std::to_string(v + 1));

    std::vector<Arrow> arrows;
    for (int v = 1; v < params.vertices; ++v) {
      int other = pick(rng, v);
      bool outward = pick(rng, 2) == 0;
      const std::string& here = vertices[v];
      const std::string& there = vertices[other];
      arrows.push_back({arrow_name(static_cast<int>(arrows.size())), outward ? here : there, outward ? there : here});
    }
    while (static_cast<int>(arrows.size()) < params.arrows) {
      const std::string& from = vertices[pick(rng, params.vertices)];
      const std::string& to = vertices[pick(rng, params.vertices)];
      arrows.push_back({arrow_name(static_cast<int>(arrows.size())), from, to});
    }

    Attempt state(vertices, arrows);
    const Quiver& quiver = state.quiver;

    if (quiver.arrow_count() > 0) {
      for (int k = 0; k < params.relation_count; ++k) {
        for (int attempt_walk = 0; attempt_walk < 8; ++attempt_walk) {
          int length = params.require == Requirement::kQuadratic ? 2 : 2 + pick(rng, params.max_relation_length - 1);
          std::vector<int> walk{pick(rng, quiver.arrow_count())};
          while (static_cast<int>(walk.size()) < length) {
            const auto& outs = quiver.out_arrows(quiver.target_of(walk.back()));
            if (outs.empty()) break;
            walk.push_back(outs[pick(rng, static_cast<int>(outs.size()))]);
          }
          if (static_cast<int>(walk.size()) == length) {
            state.add_relation(std::move(walk));
            break;
          }
        }
      }
    }

    MonomialAlgebra algebra = state.build();
    int repair_budget = quiver.arrow_count() * quiver.arrow_count() + 8;
    while (!algebra.is_admissible()) {
      if (--repair_budget < 0) throw GenerationError("admissibility repair did not converge");
      state.add_relation(smallest_cyclic_window(quiver, algebra.admissibility_violation()->witness_cycle).arrows());
      algebra = state.build();
    }

    if (params.require == Requirement::kSpecialMultiserial) {
      repair_budget = quiver.arrow_count() * quiver.arrow_count() + 8;
      for (MultiserialVerdict verdict = is_special_multiserial(algebra); !verdict.holds;
           verdict = is_special_multiserial(algebra)) {
        if (--repair_budget < 0) throw GenerationError("multiserial repair did not converge");
        const MultiserialWitness& witness = *verdict.witness;
        for (size_t i = 1; i < witness.neighbors.size(); ++i) {
          int other = witness.neighbors[i];
          state.add_relation(witness.right_side ? std::vector<int>{witness.arrow, other}
                                                : std::vector<int>{other, witness.arrow});
        }
        algebra = state.build();
      }
    }

    bool accepted = true;
    switch (params.require) {
      case Requirement::kAny: break;
      case Requirement::kQuadratic: accepted = is_quadratic(algebra); break;
      case Requirement::kSpecialMultiserial: accepted = is_special_multiserial(algebra).holds; break;
      case Requirement::kUmp: accepted = is_ump(algebra).holds; break;
    }
    if (!accepted) continue;

    QuiverDocument document;
    document.name = "s" + std::to_string(seed);
    document.vertices = std::move(vertices);
    document.arrows = std::move(arrows);
    for (const auto& relation : state.relations) {
      std::vector<std::string> ids;
      ids.reserve(relation.size());
      for (int a : relation) ids.push_back(quiver.arrow(a).id);
      document.relations.push_back(std::move(ids));
    }
    return document;
  }
  throw GenerationError("no instance satisfying " + std::string(requirement_name(params.require)) + " after " +
                        std::to_string(params.attempt_cap) + " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace quivalg
