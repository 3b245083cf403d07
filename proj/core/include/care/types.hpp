#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "care/errors.hpp"

namespace care {

// Sink prediction recorded when no unambiguous label could be extracted.
// Scored as incorrect downstream; task labels may not collide with it.
inline constexpr const char* kAbstain = "ABSTAIN";

// Agent roles. A task's prompt_templates map is keyed by these names.
namespace role {
inline constexpr const char* kBaseline = "baseline";
inline constexpr const char* kSelfCheck = "self_check";
inline constexpr const char* kSpecialistA = "specialist_a";
inline constexpr const char* kSpecialistB = "specialist_b";
inline constexpr const char* kJudge = "judge";
inline constexpr const char* kBlindJudge = "blind_judge";
}  // namespace role

// Case-insensitive label equality (ASCII).
bool same_label(const std::string& a, const std::string& b);

// Opaque image payload. Bytes plus a media-type tag; the harness never
// decodes pixels, it only forwards payloads to backends.
struct ImageRef {
  std::vector<std::uint8_t> bytes;
  std::string media_type;

  bool operator==(const ImageRef&) const = default;
};

// A mutually exclusive disease pair plus the prompt templates for each role.
struct TaskSpec {
  std::string task_id;
  std::string label_a;
  std::string label_b;
  std::map<std::string, std::string> prompt_templates;  // role -> template

  // Enforces: distinct labels (case-insensitive), no ABSTAIN collision, and
  // per-role placeholder sets that exactly match the role's required set.
  // `roles` restricts the check to templates a run will actually use;
  // empty means "validate every template present".
  void validate(const std::vector<std::string>& roles = {}) const;

  const std::string& other_label(const std::string& label) const;

  bool operator==(const TaskSpec&) const = default;
};

// Placeholder names required by a role's template, exactly.
const std::vector<std::string>& required_placeholders(const std::string& role_name);

// One evaluation case.
struct Study {
  std::string study_id;
  std::vector<ImageRef> images;  // non-empty
  std::string truth;             // one of the task's two labels
  std::optional<std::string> report_text;
  std::map<std::string, std::string> meta;

  void validate(const TaskSpec& task) const;

  bool operator==(const Study&) const = default;
};

enum class Confidence { low, medium, high };

std::string to_string(Confidence c);
Confidence confidence_from_string(const std::string& s);

// A single hypothesis-conditioned claim. `supports` always names the
// generating agent's hypothesis; the parser coerces anything else.
struct EvidenceClaim {
  std::string finding;  // non-empty
  std::optional<std::string> location;
  std::string supports;
  std::optional<Confidence> confidence;

  bool operator==(const EvidenceClaim&) const = default;
};

// An agent's full evidence output. Deliberately has no final-diagnosis
// field: specialists cannot decide, only argue.
struct EvidenceSet {
  std::string hypothesis;
  std::vector<EvidenceClaim> claims;
  std::string raw_text;  // verbatim model output

  bool operator==(const EvidenceSet&) const = default;
};

enum class ClaimFlagKind { supported, unsupported, contradictory };

std::string to_string(ClaimFlagKind k);
ClaimFlagKind claim_flag_from_string(const std::string& s);

struct ClaimFlag {
  std::size_t claim_index = 0;
  std::string source_hypothesis;
  ClaimFlagKind flag = ClaimFlagKind::supported;

  bool operator==(const ClaimFlag&) const = default;
};

// The judge's verdict. Carries flags and a rationale but never claims of
// its own; the specialists' EvidenceSets are immutable once parsed.
struct Adjudication {
  std::string final_label;  // label_a, label_b or kAbstain
  std::vector<ClaimFlag> claim_flags;
  std::string rationale;
  std::string raw_text;

  bool operator==(const Adjudication&) const = default;
};

// How a final decision was extracted from raw model text.
enum class Extraction { structured, keyword_fallback, repair_pass, none };

std::string to_string(Extraction e);
Extraction extraction_from_string(const std::string& s);

// One model exchange inside a run. Repair calls are recorded but excluded
// from the pipeline's declared call budget; transport retries are counted
// on the exchange they eventually resolved.
struct Exchange {
  std::string role;
  std::string request_hash;
  std::string response_text;
  std::uint64_t latency_ms = 0;
  bool from_cache = false;
  bool repair = false;
  std::uint32_t retries = 0;

  bool operator==(const Exchange&) const = default;
};

// Parsed artifacts of a CARE-family run.
struct ParsedArtifacts {
  EvidenceSet evidence_a;
  EvidenceSet evidence_b;
  Adjudication adjudication;

  bool operator==(const ParsedArtifacts&) const = default;
};

// One pipeline's full outcome for one study.
struct RunRecord {
  std::string study_id;
  std::string pipeline_id;
  std::string prediction;  // label or kAbstain
  std::vector<Exchange> exchanges;
  std::optional<ParsedArtifacts> parsed;
  Extraction extraction = Extraction::none;
  std::vector<std::string> notes;  // degraded-path annotations
  std::uint64_t seed = 0;
  std::uint64_t timestamp_ms = 0;  // 0 for deterministic backends

  // Exchanges that count against the declared call budget.
  std::size_t budget_exchanges() const;

  bool operator==(const RunRecord&) const = default;
};

}  // namespace care
