#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "traintrack/braid.hpp"
#include "traintrack/colour.hpp"
#include "traintrack/diagram.hpp"
#include "traintrack/twocells.hpp"

// Wire formats:
//   diagram:      {"inputs": p, "levels": [{"offset": k,
//                  "gen": "alpha" | "beta" | {"train": "<colour>"}}]}
//   braid:        {"source": ["a","b"], "word": [[1,1],[1,-1]]}   (1-based)
//   certificate:  {"steps": [{"erase": n} | {"delete": [level,strand]}]}
//   report:       {"check": name, "instances": n, "failures": [...]}
namespace traintrack::jsonio {

nlohmann::json diagram_to_json(const diagrams::DiagramWord& d, const ColourSet& colours);
diagrams::DiagramWord diagram_from_json(const nlohmann::json& j, const ColourSet& colours);

nlohmann::json braid_to_json(const braids::ColouredBraid& b, const ColourSet& colours);
braids::ColouredBraid braid_from_json(const nlohmann::json& j, const ColourSet& colours);

nlohmann::json certificate_to_json(const diagrams::ContractionCertificate& cert);
diagrams::ContractionCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const twocells::Report& report);

nlohmann::json theta_to_json(const ColourWord& word, const ColourSet& colours);

} // namespace traintrack::jsonio
