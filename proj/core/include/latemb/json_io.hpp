#pragma once

#include <string>

#include <json.hpp>

#include "latemb/decide.hpp"
#include "latemb/topology.hpp"

namespace latemb {

// Wire formats shared by the CLI and any external consumer:
//   lattice     {"gram": [[int,...],...]}
//   invariants  {"b2_plus": int, "b2_minus": int, "parity": "even"|"odd"}
//   framed link {"framings": [int], "linking": [[int]]}   (diagonal ignored)
//   embedding   {"degree": int, "source_gram": [[...]], "target_gram": [[...]],
//                "matrix": [[...]]}                        (matrix row-major, m x n)
// All numbers are exact; values outside the JSON-safe integer range are
// written as decimal strings and accepted in either form.

/// Parses text as JSON; Errc::parse on malformed input.
nlohmann::json parse_json_text(const std::string& text);

Int int_from_json(const nlohmann::json& j);
nlohmann::json int_to_json(const Int& v);

GramMatrix gram_from_json(const nlohmann::json& j);
nlohmann::json gram_to_json(const GramMatrix& g);

FormInvariants invariants_from_json(const nlohmann::json& j);
nlohmann::json invariants_to_json(const FormInvariants& inv);

FramedLinkData framed_link_from_json(const nlohmann::json& j);

/// The parsed certificate is NOT verified here; run verify() on it.
Embedding embedding_from_json(const nlohmann::json& j);
nlohmann::json embedding_to_json(const Embedding& e);

nlohmann::json report_to_json(const DecisionReport& report);

std::string covering_status_name(CoveringStatus s);
std::string degree_family_kind_name(DegreeFamily::Kind k);

} // namespace latemb
