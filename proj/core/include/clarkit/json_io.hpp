#pragma once

#include <string>

#include <json.hpp>

#include "clarkit/benzenoid_graph.hpp"
#include "clarkit/clar.hpp"
#include "clarkit/extremal.hpp"
#include "clarkit/matching.hpp"
#include "clarkit/subcubic_tree.hpp"

namespace clarkit {

// All formats carry lexicographically ordered keys (nlohmann's default
// object ordering), so serialized output is byte-stable. Spec and graph
// documents are versioned with "format": "clar-kit/1".
inline constexpr const char* kFormatTag = "clar-kit/1";

nlohmann::json tree_to_json(const SubcubicTree& tree);
SubcubicTree tree_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const BenzenoidSpec& spec);
BenzenoidSpec spec_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const BenzenoidGraph& graph);
// Raw-structure loader (fixtures, possibly pericondensed).
BenzenoidGraph graph_from_json(const nlohmann::json& j);

nlohmann::json matching_to_json(const PerfectMatching& m);
PerfectMatching matching_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ClarCertificate& cert);
ClarCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json bound_info_to_json(const ClarBoundInfo& info);
nlohmann::json witness_to_json(const FamilyBWitness& witness);
nlohmann::json report_to_json(const VerificationReport& report);

// Reads and parses a JSON file; throws Error with a readable message on
// missing files or malformed content.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace clarkit
