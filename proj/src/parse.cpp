#include "quivalg/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "quivalg/errors.hpp"

namespace quivalg {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    tokens.push_back({line.substr(begin, i - begin), static_cast<int>(begin) + 1});
  }
  return tokens;
}

}  // namespace

QuiverDocument parse_quiver_file(const std::string& text) {
  QuiverDocument document;
  bool saw_header = false;
  std::set<std::string> vertex_ids;
  std::set<std::string> arrow_ids;
  std::set<std::vector<std::string>> relation_keys;

  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();

    if (head.text == "quiver") {
      if (saw_header) throw ParseError(line_number, head.column, "duplicate quiver header");
      if (tokens.size() != 2) throw ParseError(line_number, head.column, "quiver header needs exactly one name");
      document.name = tokens[1].text;
      saw_header = true;
      continue;
    }
    if (!saw_header) throw ParseError(line_number, head.column, "expected quiver header first");

    if (head.text == "vertex") {
      if (tokens.size() < 2) throw ParseError(line_number, head.column, "vertex declaration needs at least one id");
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!vertex_ids.insert(tokens[i].text).second) {
          throw ParseError(line_number, tokens[i].column, "duplicate vertex id: " + tokens[i].text);
        }
        document.vertices.push_back(tokens[i].text);
      }
    } else if (head.text == "arrow") {
      if (tokens.size() != 4) {
        throw ParseError(line_number, head.column, "arrow declaration needs an id, a source and a target");
      }
      if (!arrow_ids.insert(tokens[1].text).second) {
        throw ParseError(line_number, tokens[1].column, "duplicate arrow id: " + tokens[1].text);
      }
      for (int side = 2; side <= 3; ++side) {
        if (!vertex_ids.count(tokens[side].text)) {
          throw ParseError(line_number, tokens[side].column, "unknown vertex id: " + tokens[side].text);
        }
      }
      document.arrows.push_back({tokens[1].text, tokens[2].text, tokens[3].text});
    } else if (head.text == "relation") {
      if (tokens.size() < 3) throw ParseError(line_number, head.column, "relation length must be >= 2");
      std::vector<std::string> ids;
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!arrow_ids.count(tokens[i].text)) {
          throw ParseError(line_number, tokens[i].column, "unknown arrow id: " + tokens[i].text);
        }
        ids.push_back(tokens[i].text);
      }
      for (size_t i = 1; i < ids.size(); ++i) {
        const Arrow* previous = nullptr;
        const Arrow* current = nullptr;
        for (const Arrow& arrow : document.arrows) {
          if (arrow.id == ids[i - 1]) previous = &arrow;
          if (arrow.id == ids[i]) current = &arrow;
        }
        if (previous->target != current->source) {
          throw ParseError(line_number, tokens[i + 1].column,
                           "arrows " + ids[i - 1] + " and " + ids[i] + " do not compose");
        }
      }
      if (!relation_keys.insert(ids).second) {
        throw ParseError(line_number, head.column, "duplicate relation");
      }
      document.relations.push_back(std::move(ids));
    } else {
      throw ParseError(line_number, head.column, "unknown directive: " + head.text);
    }
  }
  if (!saw_header) throw ParseError(1, 1, "expected quiver header first");
  return document;
}

std::string print_document(const QuiverDocument& document) {
  std::ostringstream out;
  out << "quiver " << document.name << "\n";
  if (!document.vertices.empty()) {
    out << "vertex";
    for (const std::string& id : document.vertices) out << " " << id;
    out << "\n";
  }
  for (const Arrow& arrow : document.arrows) {
    out << "arrow " << arrow.id << " " << arrow.source << " " << arrow.target << "\n";
  }
  for (const auto& relation : document.relations) {
    out << "relation";
    for (const std::string& id : relation) out << " " << id;
    out << "\n";
  }
  return out.str();
}

MonomialAlgebra document_to_algebra(const QuiverDocument& document) {
  Quiver quiver(document.vertices, document.arrows);
  std::vector<Path> relations;
  relations.reserve(document.relations.size());
  for (const auto& ids : document.relations) relations.push_back(Path::of_ids(quiver, ids));
  MonomialAlgebra algebra(std::move(quiver), std::move(relations));
  if (!algebra.is_admissible()) {
    throw AdmissibilityError("the relations are not admissible: every power of " +
                             algebra.admissibility_violation()->witness_cycle.render(algebra.quiver()) +
                             " is nonzero");
  }
  return algebra;
}

}  // namespace quivalg
