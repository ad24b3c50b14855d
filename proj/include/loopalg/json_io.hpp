#pragma once
#include <nlohmann/json.hpp>

#include "loopalg/expansion.hpp"
#include "loopalg/sac.hpp"
#include "loopalg/twists.hpp"

namespace loopalg {

using Json = nlohmann::ordered_json;

// {"rank": r, "trunc": N, "terms": [{"word": ["A1","B1"], "coef": "1/2"}, ...]}
// Terms in canonical order: degree, then lexicographic word. Only nonzero
// coefficients appear; coefficients are decimal-free rational strings.
Json tensor_to_json(const TruncatedTensor &t);
TruncatedTensor tensor_from_json(const Json &j, const HomologyRef &basis);

Json expansion_to_json(const Expansion &e);

Json fig8_report_to_json(const FigureEightReport &rep);

// {"objects": [...], "arcs": [{"name": ..., "target": ...}], "loops": [...],
//  "trunc": N}
GroupoidSpec groupoid_spec_from_json(const Json &j);
GroupoidSpec groupoid_spec_from_file(const std::string &path);

} // namespace loopalg
