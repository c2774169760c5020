#pragma once

// JSON wire formats. Coefficients travel as decimal strings, terms sorted by key.
//
//   {"basis":"G","degree":3,"terms":[{"perm":"3,1,2","coeff":"-1"}]}
//   {"basis":"R","degree":3,"terms":[{"comp":"[1,2]","coeff":"1"}]}

#include <json.hpp>

#include "fqsym/identities.hpp"
#include "fqsym/nsym.hpp"

namespace fqsym {

using Json = nlohmann::ordered_json;

Json to_json(const HomogeneousElement& x);
Json to_json(const RibbonElement& x);
/// elapsed_ms is emitted only when include_timing is set, which keeps the
/// default output byte-identical across runs.
Json to_json(const VerificationReport& report, bool include_timing = false);

HomogeneousElement element_from_json(const Json& j);
RibbonElement ribbon_from_json(const Json& j);

} // namespace fqsym
