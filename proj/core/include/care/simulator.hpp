#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "care/backend.hpp"
#include "care/types.hpp"

namespace care::sim {

// Probabilistic model behind the simulator backend: a per-study latent
// difficulty d ~ Beta(alpha, beta) drives every single-agent call, so
// repeated calls on one study are positively correlated; specialists emit
// claims whose hidden groundedness depends on whether their hypothesis
// matches the truth; the judge scores each side's visual consistency.
struct SimConfig {
  double alpha = 2.0;
  double beta = 1.0;
  std::uint32_t n_claims = 4;
  double g_true = 0.7;
  double g_false = 0.4;
  double judge_sensitivity = 0.9;
  double judge_noise_sd = 0.5;
  std::uint64_t master_seed = 20250101;

  // Rejects configs with no signal (g_true <= g_false) or out-of-range
  // probabilities.
  void validate() const;

  bool operator==(const SimConfig&) const = default;
};

SimConfig default_sim_config();

// Hidden per-claim groundedness of one specialist's evidence. Never leaves
// the simulator in emitted text; the judge re-derives it.
struct LatentEvidence {
  std::string hypothesis;
  std::vector<bool> grounded;
};

struct JudgeOutcome {
  bool choose_a = false;
  double score_a = 0.0;
  double score_b = 0.0;
  std::vector<bool> assessed_a;  // judge's per-claim grounded assessments
  std::vector<bool> assessed_b;
};

// Pure functions of (config, study_id, ...). All streams are derived by
// hashing (master_seed, study_id, role, call_index), so results are
// independent of evaluation order and thread count.
class SimModel {
 public:
  explicit SimModel(SimConfig cfg);

  // d for this study, drawn once from Beta(alpha, beta).
  double difficulty(const std::string& study_id) const;

  // One single-agent call: Bernoulli(d) "correct", independent across
  // call_index given d.
  bool call_correct(const std::string& study_id, const std::string& role_name,
                    std::uint64_t call_index) const;

  LatentEvidence specialist_latent(const std::string& study_id,
                                   const std::string& hypothesis,
                                   bool matches_truth) const;

  // Consistency scoring per side: count of claims the judge assesses as
  // grounded (assessment correct with probability judge_sensitivity, else
  // inverted) plus Gaussian noise. Ties go to side a. A blind judge cannot
  // check claims against the image, so its assessment falls to chance.
  JudgeOutcome judge(const std::string& study_id, const LatentEvidence& a,
                     const LatentEvidence& b, bool blind) const;

  const SimConfig& config() const { return cfg_; }

 private:
  SimConfig cfg_;
};

// Backend adapter: renders SimModel outcomes as parseable model text
// (FINAL: lines, claims JSON, adjudication JSON). Stateless after
// construction; complete() is safe from many threads.
class SimBackend : public Backend {
 public:
  SimBackend(SimConfig cfg, TaskSpec task, const std::vector<Study>& studies);

  ModelResponse complete(const ModelRequest& request) override;
  std::string id() const override;

  const SimModel& model() const { return model_; }

 private:
  SimModel model_;
  TaskSpec task_;
  std::map<std::string, std::string> truth_by_study_;
};

// Balanced synthetic studies (deterministic ids, truths, image bytes).
std::vector<Study> make_studies(const TaskSpec& task, std::size_t n);

}  // namespace care::sim
