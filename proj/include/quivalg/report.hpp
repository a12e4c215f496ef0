#ifndef QUIVALG_REPORT_HPP
#define QUIVALG_REPORT_HPP

#include <string>

#include "json.hpp"
#include "quivalg/algebra.hpp"

namespace quivalg {

// Full analysis with stable key order: top-level sections algebra,
// structural, ramifications, homology, diagnostics.  Paths are rendered as
// dot-joined arrow ids.  Throws HypothesisError when the quiver is
// disconnected (the ramifications decomposition needs connectivity).
nlohmann::ordered_json analysis_report(const std::string& name, const MonomialAlgebra& algebra);

}  // namespace quivalg

#endif
