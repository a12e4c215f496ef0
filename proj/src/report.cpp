#include "quivalg/report.hpp"

#include "quivalg/homology.hpp"
#include "quivalg/ramifications.hpp"
#include "quivalg/structure.hpp"

namespace quivalg {

namespace {

using nlohmann::ordered_json;

ordered_json render_all(const Quiver& quiver, const std::vector<Path>& paths) {
  ordered_json out = ordered_json::array();
  for (const Path& p : paths) out.push_back(p.render(quiver));
  return out;
}

ordered_json algebra_section(const std::string& name, const MonomialAlgebra& algebra) {
  const Quiver& quiver = algebra.quiver();
  ordered_json section;
  section["name"] = name;
  section["vertices"] = quiver.vertex_ids();
  ordered_json arrows = ordered_json::array();
  for (const Arrow& arrow : quiver.arrows()) {
    arrows.push_back({{"id", arrow.id}, {"source", arrow.source}, {"target", arrow.target}});
  }
  section["arrows"] = std::move(arrows);
  section["relations"] = render_all(quiver, algebra.relations());
  section["removed_relations"] = render_all(quiver, algebra.removed_relations());
  section["admissible"] = algebra.is_admissible();
  section["connected"] = quiver.is_weakly_connected();
  section["dimension"] = algebra.dimension();
  return section;
}

ordered_json structural_section(const MonomialAlgebra& algebra, const MaximalPathSet& maximal) {
  const Quiver& quiver = algebra.quiver();
  ordered_json section;
  section["maximal_paths"] = render_all(quiver, maximal.paths());

  UmpVerdict ump = is_ump(algebra);
  section["ump"] = ump.holds;
  if (!ump.holds) {
    section["ump_witness"] = {{"first", ump.witness->first.render(quiver)},
                              {"second", ump.witness->second.render(quiver)},
                              {"shared_arrow", quiver.arrow(ump.witness->shared_arrow).id}};
  }

  MultiserialVerdict serial = is_special_multiserial(algebra);
  section["special_multiserial"] = serial.holds;
  if (!serial.holds) {
    ordered_json neighbors = ordered_json::array();
    for (int a : serial.witness->neighbors) neighbors.push_back(quiver.arrow(a).id);
    section["special_multiserial_witness"] = {{"arrow", quiver.arrow(serial.witness->arrow).id},
                                              {"side", serial.witness->right_side ? "right" : "left"},
                                              {"neighbors", std::move(neighbors)}};
  }

  section["quadratic"] = is_quadratic(algebra);

  NakayamaClassification nakayama = classify_nakayama(algebra);
  ordered_json nakayama_json;
  nakayama_json["class"] = nakayama_tag_name(nakayama.tag);
  if (nakayama.tag == NakayamaTag::kSelfinjective) {
    nakayama_json["n"] = nakayama.n;
    nakayama_json["m"] = nakayama.m;
    nakayama_json["ump"] = *nakayama.ump;
  }
  section["nakayama"] = std::move(nakayama_json);

  ordered_json criterion_json;
  criterion_json["applicable"] = serial.holds;
  if (serial.holds) {
    CriterionVerdict criterion = ump_criterion(algebra);
    criterion_json["holds"] = criterion.holds;
    ordered_json entries = ordered_json::array();
    for (const CriterionEntry& entry : criterion.entries) {
      ordered_json one;
      one["relation"] = entry.relation.render(quiver);
      one["satisfied"] = entry.satisfied;
      if (entry.cycle) one["cycle"] = entry.cycle->render(quiver);
      entries.push_back(std::move(one));
    }
    criterion_json["relations"] = std::move(entries);
  }
  section["ump_criterion"] = std::move(criterion_json);
  return section;
}

ordered_json induced_summary(const InducedComponentAlgebra& induced) {
  const MonomialAlgebra& algebra = induced.algebra;
  const Quiver& quiver = algebra.quiver();
  ordered_json out;
  ordered_json arrows = ordered_json::array();
  for (const Arrow& arrow : quiver.arrows()) arrows.push_back(arrow.id);
  out["arrows"] = std::move(arrows);
  out["relations"] = render_all(quiver, algebra.relations());
  out["maximal_paths"] = render_all(quiver, induced.maximal.paths());
  out["ump"] = is_ump(algebra).holds;
  out["special_multiserial"] = is_special_multiserial(algebra).holds;
  out["quadratic"] = is_quadratic(algebra);
  out["nakayama"] = nakayama_tag_name(classify_nakayama(algebra).tag);
  PerfectStructure perfect = perfect_paths(algebra);
  out["cm_free"] = perfect.paths.empty();
  out["perfect_paths"] = render_all(quiver, perfect.paths);
  return out;
}

ordered_json ramifications_section(const MonomialAlgebra& algebra, const MaximalDecomposition& decomposition) {
  const Quiver& quiver = algebra.quiver();
  const RamificationsGraph& graph = decomposition.graph;
  ordered_json section;

  ordered_json omega;
  for (int a = 0; a < quiver.arrow_count(); ++a) omega[quiver.arrow(a).id] = graph.omega_of[a].render(quiver);
  section["omega"] = std::move(omega);
  section["vertices"] = render_all(quiver, graph.vertices);

  ordered_json edges = ordered_json::array();
  for (const auto& [from, to] : graph.edges) {
    edges.push_back({graph.vertices[from].render(quiver), graph.vertices[to].render(quiver)});
  }
  section["edges"] = std::move(edges);

  ordered_json components = ordered_json::array();
  for (size_t c = 0; c < graph.components.size(); ++c) {
    ordered_json one;
    ordered_json members = ordered_json::array();
    for (int v : graph.components[c]) members.push_back(graph.vertices[v].render(quiver));
    one["members"] = std::move(members);

    ComponentShapeInfo shape = component_shape(quiver, graph, static_cast<int>(c));
    one["shape"] = component_shape_name(shape.shape);
    ordered_json cycle_vertices;
    for (size_t i = 0; i < graph.components[c].size(); ++i) {
      cycle_vertices[graph.vertices[graph.components[c][i]].render(quiver)] = static_cast<bool>(shape.vertex_is_cycle[i]);
    }
    one["cycle_vertices"] = std::move(cycle_vertices);

    UnilateralVerdict unilateral = is_unilaterally_connected(graph, static_cast<int>(c));
    one["unilaterally_connected"] = unilateral.holds;
    if (!unilateral.holds) {
      one["witness"] = {unilateral.witness->first.render(quiver), unilateral.witness->second.render(quiver)};
    }
    one["induced"] = induced_summary(decomposition.components[c]);
    components.push_back(std::move(one));
  }
  section["components"] = std::move(components);

  ordered_json assignment;
  for (size_t i = 0; i < decomposition.full.entries.size(); ++i) {
    assignment[decomposition.full.entries[i].path.render(quiver)] = decomposition.assignment[i];
  }
  section["maximal_path_assignment"] = std::move(assignment);

  ordered_json sizes = ordered_json::array();
  for (const InducedComponentAlgebra& induced : decomposition.components) {
    sizes.push_back(induced.maximal.entries.size());
  }
  section["counts"] = {{"total", decomposition.full.entries.size()}, {"per_component", std::move(sizes)}};
  return section;
}

ordered_json homology_section(const MonomialAlgebra& algebra, const HomologicalReport& report) {
  const Quiver& quiver = algebra.quiver();
  ordered_json section;
  section["cm_free"] = report.cm_free;
  section["perfect_paths"] = render_all(quiver, report.perfect.paths);

  ordered_json pairs = ordered_json::array();
  for (const auto& [p, q] : report.perfect.pairs) pairs.push_back({p.render(quiver), q.render(quiver)});
  section["perfect_pairs"] = std::move(pairs);

  ordered_json cycles = ordered_json::array();
  for (const auto& cycle : report.perfect.relation_cycles) cycles.push_back(render_all(quiver, cycle));
  section["relation_cycles"] = std::move(cycles);

  ordered_json killers;
  for (const Path& p : algebra.catalog().paths) {
    MinimalKillerSets sets = minimal_killers(algebra, p);
    killers[p.render(quiver)] = {{"right", render_all(quiver, sets.right)}, {"left", render_all(quiver, sets.left)}};
  }
  section["killers"] = std::move(killers);

  const RelationsQuiver& relations = report.relations;
  ordered_json relations_json;
  relations_json["vertices"] = render_all(quiver, relations.vertices);
  ordered_json arrows = ordered_json::array();
  for (const auto& [from, to] : relations.arrows) {
    arrows.push_back({relations.vertices[from].render(quiver), relations.vertices[to].render(quiver)});
  }
  relations_json["arrows"] = std::move(arrows);
  ordered_json components = ordered_json::array();
  for (size_t c = 0; c < relations.components.size(); ++c) {
    ordered_json one;
    ordered_json members = ordered_json::array();
    for (int v : relations.components[c]) members.push_back(relations.vertices[v].render(quiver));
    one["members"] = std::move(members);
    one["class"] = component_class_name(relations.classes[c]);
    components.push_back(std::move(one));
  }
  relations_json["components"] = std::move(components);
  relations_json["d"] = relations.d;
  section["relations_quiver"] = std::move(relations_json);

  auto verdict_json = [](const GorensteinVerdict& verdict, bool with_bound) {
    ordered_json out;
    out["applicable"] = verdict.applicable;
    if (!verdict.applicable) {
      out["failed_hypothesis"] = verdict.failed_hypothesis;
    } else {
      out["holds"] = verdict.holds;
      if (with_bound && verdict.holds) out["bound"] = verdict.bound;
    }
    return out;
  };
  section["gorenstein"] = verdict_json(report.gorenstein, true);
  section["finite_global_dimension"] = verdict_json(report.finite_global_dimension, false);

  ordered_json stable;
  if (report.gorenstein.applicable) {
    StableCategoryVerdict verdict = stable_category_shape(algebra);
    stable["applicable"] = true;
    stable["equivalence"] = verdict.equivalence;
    if (verdict.equivalence) {
      stable["cycle_lengths"] = verdict.cycle_lengths;
    } else {
      stable["offending"] = verdict.offending->render(quiver);
    }
  } else {
    stable["applicable"] = false;
    stable["failed_hypothesis"] = report.gorenstein.failed_hypothesis;
  }
  section["stable_category"] = std::move(stable);
  return section;
}

}  // namespace

ordered_json analysis_report(const std::string& name, const MonomialAlgebra& algebra) {
  MaximalDecomposition decomposition = decompose_maximal_paths(algebra);
  HomologicalReport homology = homological_report(algebra);

  ordered_json report;
  report["algebra"] = algebra_section(name, algebra);
  report["structural"] = structural_section(algebra, decomposition.full);
  report["ramifications"] = ramifications_section(algebra, decomposition);
  report["homology"] = homology_section(algebra, homology);

  ordered_json diagnostics;
  diagnostics["component_criterion_cm_free"] = homology.component_criterion_cm_free;
  diagnostics["cm_criteria_agree"] = homology.cm_criteria_agree;
  MultiserialVerdict serial = is_special_multiserial(algebra);
  if (serial.holds) {
    diagnostics["criterion_matches_ump"] = ump_criterion(algebra).holds == is_ump(algebra).holds;
  }
  diagnostics["syzygy_violations"] = syzygy_audit(algebra).size();
  diagnostics["decomposition_consistent"] = true;  // decompose_maximal_paths audits and throws
  report["diagnostics"] = std::move(diagnostics);
  return report;
}

}  // namespace quivalg
