#ifndef QUIVALG_PARSE_HPP
#define QUIVALG_PARSE_HPP

#include <string>
#include <vector>

#include "quivalg/algebra.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

// A quiver file, structurally.  Declaration order is preserved so that
// parse(print(document)) reproduces the document exactly.
struct QuiverDocument {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> relations;  // arrow ids, left to right

  friend bool operator==(const QuiverDocument&, const QuiverDocument&) = default;
};

// Line-oriented grammar: a `quiver NAME` header, then `vertex`, `arrow` and
// `relation` lines.  `#` starts a comment.  Throws ParseError with 1-based
// line/column positions.
QuiverDocument parse_quiver_file(const std::string& text);

std::string print_document(const QuiverDocument& document);

// Builds the bound quiver algebra.  Throws AdmissibilityError when the
// relations leave an endlessly repeatable cycle alive.
MonomialAlgebra document_to_algebra(const QuiverDocument& document);

}  // namespace quivalg

#endif
