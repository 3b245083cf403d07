#pragma once

// Canonical JSON serialization for every core type. nlohmann::json with its
// default std::map object storage keeps keys lexicographically ordered, so
// dump() output is byte-stable and safe to hash or replay.

#include <json.hpp>

#include "care/types.hpp"

namespace care {

using json = nlohmann::json;

json to_json(const ImageRef& v);
json to_json(const TaskSpec& v);
json to_json(const Study& v);
json to_json(const EvidenceClaim& v);
json to_json(const EvidenceSet& v);
json to_json(const ClaimFlag& v);
json to_json(const Adjudication& v);
json to_json(const Exchange& v);
json to_json(const RunRecord& v);

ImageRef image_ref_from_json(const json& j);
TaskSpec task_spec_from_json(const json& j);
Study study_from_json(const json& j);
EvidenceClaim evidence_claim_from_json(const json& j);
EvidenceSet evidence_set_from_json(const json& j);
ClaimFlag claim_flag_from_json(const json& j);
Adjudication adjudication_from_json(const json& j);
Exchange exchange_from_json(const json& j);
RunRecord run_record_from_json(const json& j);

// Canonical single-line dump (sorted keys, no trailing newline).
std::string canonical_dump(const json& j);

// base64 helpers for image payloads embedded in JSON.
std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

}  // namespace care
