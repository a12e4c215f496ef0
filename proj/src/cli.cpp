#include "quivalg/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "quivalg/dotexport.hpp"
#include "quivalg/errors.hpp"
#include "quivalg/homology.hpp"
#include "quivalg/parse.hpp"
#include "quivalg/ramifications.hpp"
#include "quivalg/randomgen.hpp"
#include "quivalg/report.hpp"
#include "quivalg/structure.hpp"

namespace quivalg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MonomialAlgebra load_algebra(const std::string& path, QuiverDocument& document) {
  document = parse_quiver_file(read_file(path));
  return document_to_algebra(document);
}

// One sampled instance against every property its verdicts make applicable.
std::optional<std::string> check_instance(const MonomialAlgebra& algebra) {
  if (!algebra.is_admissible()) return "generated instance is not admissible";
  try {
    decompose_maximal_paths(algebra);
  } catch (const AuditError& audit) {
    return std::string("maximal-path decomposition audit failed: ") + audit.what();
  }
  if (!syzygy_audit(algebra).empty()) return "syzygy dimension audit reported violations";

  MultiserialVerdict serial = is_special_multiserial(algebra);
  UmpVerdict ump = is_ump(algebra);
  if (serial.holds && ump_criterion(algebra).holds != ump.holds) {
    return "relation-cycle criterion disagrees with the maximal-path check";
  }
  if (is_quadratic(algebra) && ump.holds != serial.holds) {
    return "quadratic instance: ump and special multiserial disagree";
  }
  if (ump.holds) {
    RamificationsGraph graph = ramifications_graph(algebra);
    for (size_t c = 0; c < graph.components.size(); ++c) {
      if (!is_unilaterally_connected(graph, static_cast<int>(c)).holds) {
        return "ramification component is not unilaterally connected";
      }
    }
  }
  if (ump.holds && serial.holds) {
    for (const Path& p : perfect_paths(algebra).paths) {
      if (!perfect_path_matches_structure(algebra, p)) {
        return "perfect path " + p.render(algebra.quiver()) + " fails the structure conditions";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"monomial bound quiver algebra toolkit"};
  app.require_subcommand(1);

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand("analyze", "full analysis report for a quiver file");
  analyze->add_option("file", analyze_file, "quiver file")->required();

  std::string decompose_file;
  CLI::App* decompose = app.add_subcommand("decompose", "maximal-path decomposition along ramification components");
  decompose->add_option("file", decompose_file, "quiver file")->required();

  std::string homology_file;
  CLI::App* homology_cmd = app.add_subcommand("homology", "homological verdicts for a quiver file");
  homology_cmd->add_option("file", homology_file, "quiver file")->required();

  std::string dot_file;
  std::string graph_name = "quiver";
  CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "DOT text for one of the derived graphs");
  export_dot_cmd->add_option("file", dot_file, "quiver file")->required();
  export_dot_cmd->add_option("--graph", graph_name, "quiver, ramifications or relations")
      ->check(CLI::IsMember({"quiver", "ramifications", "relations"}));

  int samples = 200;
  std::uint64_t seed = 1;
  std::string require_name = "any";
  RandomParams params;
  CLI::App* check = app.add_subcommand("check", "property checks over random instances");
  check->add_option("--samples", samples, "number of instances")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "base seed");
  check->add_option("--require", require_name, "any, quadratic, special_multiserial or ump")
      ->check(CLI::IsMember({"any", "quadratic", "special_multiserial", "ump"}));
  check->add_option("--vertices", params.vertices, "vertex count");
  check->add_option("--arrows", params.arrows, "arrow count");
  check->add_option("--relations", params.relation_count, "sampled relation count");
  check->add_option("--max-relation-length", params.max_relation_length, "longest sampled relation");

  std::vector<const char*> argv;
  argv.push_back("quivalg");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& parse) {
    int code = app.exit(parse, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      QuiverDocument document;
      MonomialAlgebra algebra = load_algebra(analyze_file, document);
      out << analysis_report(document.name, algebra).dump(2) << "\n";
    } else if (*decompose) {
      QuiverDocument document;
      MonomialAlgebra algebra = load_algebra(decompose_file, document);
      nlohmann::ordered_json full = analysis_report(document.name, algebra);
      nlohmann::ordered_json view;
      view["algebra"] = full["algebra"];
      view["ramifications"] = full["ramifications"];
      out << view.dump(2) << "\n";
    } else if (*homology_cmd) {
      QuiverDocument document;
      MonomialAlgebra algebra = load_algebra(homology_file, document);
      nlohmann::ordered_json full = analysis_report(document.name, algebra);
      nlohmann::ordered_json view;
      view["algebra"] = full["algebra"];
      view["homology"] = full["homology"];
      view["diagnostics"] = full["diagnostics"];
      out << view.dump(2) << "\n";
    } else if (*export_dot_cmd) {
      QuiverDocument document;
      MonomialAlgebra algebra = load_algebra(dot_file, document);
      out << export_dot(algebra, *graph_kind_from_name(graph_name));
    } else if (*check) {
      params.require = *requirement_from_name(require_name);
      for (int i = 0; i < samples; ++i) {
        std::uint64_t sample_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
        QuiverDocument document = random_document(sample_seed, params);
        std::optional<std::string> failure = check_instance(document_to_algebra(document));
        if (failure) {
          std::string name = "counterexample-" + std::to_string(seed) + "-" + std::to_string(i) + ".quiver";
          std::ofstream dump(name);
          dump << print_document(document);
          err << "sample " << i << " (seed " << sample_seed << "): " << *failure << "\n";
          err << "counterexample written to " << name << "\n";
          return 3;
        }
      }
      out << "checked " << samples << " samples (require=" << require_name << "): all properties hold\n";
    }
    return 0;
  } catch (const ParseError& parse) {
    err << "parse error: " << parse.what() << "\n";
    return 2;
  } catch (const HypothesisError& hypothesis) {
    err << "hypothesis error: " << hypothesis.what() << "\n";
    return 1;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  }
}

}  // namespace quivalg
