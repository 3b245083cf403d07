#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "care/backend.hpp"
#include "care/types.hpp"

namespace care::orch {

enum class PipelineVariant { baseline, self_check, majority_vote, blind_care, care };

// Pipeline identity, e.g. baseline, self_check:3, majority_vote:3, care.
struct PipelineId {
  PipelineVariant variant = PipelineVariant::baseline;
  std::uint32_t k = 0;  // only self_check (k >= 2) and majority_vote (odd k >= 3)

  void validate() const;
  std::string str() const;
  std::size_t call_budget() const;  // 1 / k / k / 3 / 3
  std::vector<std::string> roles_used() const;

  static PipelineId parse(const std::string& text);

  bool operator==(const PipelineId&) const = default;
};

struct ParsedDecision {
  std::string label;  // task label or kAbstain
  Extraction extraction = Extraction::none;
  bool ambiguous = false;  // true when the caller should run a repair pass
};

// Decision extraction precedence: structured "final_diagnosis" field, then
// a FINAL: <label> line, then a keyword fallback over the last 400 bytes
// (exactly one label present, word-boundary, case-insensitive). Anything
// else is ambiguous; the caller issues at most one repair call and then
// records kAbstain.
ParsedDecision parse_decision(const std::string& raw_text, const TaskSpec& task);

// Structured claims extraction with bullet-line fallback. Claims whose
// `supports` names the opposing label are coerced to the agent's hypothesis
// (role conditioning); *coercions counts them when provided. Zero
// recoverable claims yields a valid empty EvidenceSet.
EvidenceSet parse_evidence(const std::string& raw_text, const std::string& hypothesis,
                           std::size_t* coercions = nullptr);

// Judge output extraction: final label via parse_decision precedence plus
// claim flags. Flags with out-of-range indices or unknown sides are dropped
// (noted). The judge cannot add claims; only flags and a rationale.
Adjudication parse_adjudication(const std::string& raw_text, const TaskSpec& task,
                                const EvidenceSet& evidence_a,
                                const EvidenceSet& evidence_b,
                                std::vector<std::string>* notes = nullptr);

// Text block a specialist's evidence becomes inside the judge prompt.
std::string render_evidence_block(const EvidenceSet& evidence);

struct RunOptions {
  std::uint64_t run_seed = 0;
  SamplingParams sampling;
  bool allow_repair = true;
  // Run the two CARE specialist calls concurrently. Off by default; the
  // study-level worker pool already provides parallelism.
  bool parallel_specialists = false;
};

// Per-(pipeline, study) seed; recorded in the RunRecord and used to derive
// per-call sampling seeds, so permuting the study list cannot change any
// individual prediction.
std::uint64_t study_seed(std::uint64_t run_seed, const std::string& pipeline_id,
                         const std::string& study_id);

RunRecord run_baseline(const TaskSpec& task, const Study& study, Backend& backend,
                       const RunOptions& opts);
RunRecord run_self_check(const TaskSpec& task, const Study& study, Backend& backend,
                         std::uint32_t k, const RunOptions& opts);
RunRecord run_majority_vote(const TaskSpec& task, const Study& study, Backend& backend,
                            std::uint32_t k, const RunOptions& opts);
RunRecord run_care(const TaskSpec& task, const Study& study, Backend& backend,
                   bool blind, const RunOptions& opts);

RunRecord run_pipeline(const PipelineId& pipeline, const TaskSpec& task,
                       const Study& study, Backend& backend, const RunOptions& opts);

// Runs every (pipeline, study) pair on a bounded worker pool and returns
// records grouped by pipeline (config order), sorted by study_id within
// each pipeline. A per-study failure is captured as an error entry, not a
// run abort.
struct RunFailure {
  std::string pipeline_id;
  std::string study_id;
  std::string message;
};

struct RunSetResult {
  std::vector<RunRecord> records;
  std::vector<RunFailure> failures;
};

RunSetResult run_all(const std::vector<PipelineId>& pipelines, const TaskSpec& task,
                     const std::vector<Study>& studies, Backend& backend,
                     const RunOptions& opts, std::size_t concurrency = 1,
                     const std::function<bool(const PipelineId&, const Study&)>& skip = {});

}  // namespace care::orch
