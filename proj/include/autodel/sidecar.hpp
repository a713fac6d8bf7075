#pragma once

#include <json.hpp>

#include "autodel/constructions.hpp"
#include "autodel/search.hpp"
#include "autodel/verify.hpp"

namespace autodel {

// Witness sidecar schema:
// { "graph6": str, "target": {"vertex": id} | {"edge": [u, v]},
//   "gamma1": spec-string | {"order": n, "table": [row-major]},
//   "gamma2": ..., "landmarks": {name: id} }
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json search_result_to_json(const SearchResult& r);

} // namespace autodel
