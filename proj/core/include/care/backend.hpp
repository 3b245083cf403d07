#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "care/errors.hpp"
#include "care/types.hpp"

namespace care {

struct SamplingParams {
  double temperature = 0.2;
  std::uint32_t max_output_tokens = 1024;
  std::optional<std::uint64_t> seed;

  bool operator==(const SamplingParams&) const = default;
};

// Uniform model-call request. `tags` is opaque trace metadata (study_id,
// call_index, hypothesis, ...) set by the orchestrator; it participates in
// canonical_hash but is never encoded onto the HTTP wire.
struct ModelRequest {
  std::string role;
  std::string prompt;
  std::vector<ImageRef> images;
  SamplingParams sampling;
  std::map<std::string, std::string> tags;

  void validate() const;
};

enum class Provenance { live, cache, replay, simulated };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct ModelResponse {
  std::string text;
  std::uint64_t latency_ms = 0;
  Provenance provenance = Provenance::live;
  std::uint32_t retries = 0;  // transport retries spent before success
};

// Backend error taxonomy. Retryable ones are retried by the HTTP client
// itself; the orchestrator treats anything escaping complete() as fatal for
// that study (recorded, run continues).
struct BackendError : Error {
  using Error::Error;
};
struct TransportError : BackendError {
  TransportError(const std::string& what, int status, std::uint32_t attempts)
      : BackendError(what), status(status), attempts(attempts) {}
  int status = 0;  // 0 = connection-level failure
  std::uint32_t attempts = 0;
};
struct RateLimitError : BackendError {
  using BackendError::BackendError;
};
struct MalformedReplyError : BackendError {
  using BackendError::BackendError;
};
struct ReplayMissError : BackendError {
  using BackendError::BackendError;
};

// The contract all backends satisfy. complete() must be safe to invoke from
// many concurrent tasks and never partially mutates shared state.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual ModelResponse complete(const ModelRequest& request) = 0;
  virtual std::string id() const = 0;
};

// One stored exchange in the transcript.
struct TranscriptRecord {
  std::string request_hash;
  std::string role;
  std::string model_id;
  std::string response_text;
  std::uint64_t latency_ms = 0;
  std::uint64_t timestamp_ms = 0;
};

// Append-only JSONL store keyed by canonical request hash. Doubles as the
// replay backend's source and as the HTTP backend's cache. Writes are
// serialized internally; lookups are lock-free after load.
class TranscriptStore {
 public:
  // Creates the file if absent; loads existing records into the index.
  explicit TranscriptStore(const std::string& path);
  ~TranscriptStore();

  TranscriptStore(const TranscriptStore&) = delete;
  TranscriptStore& operator=(const TranscriptStore&) = delete;

  std::optional<TranscriptRecord> lookup(const std::string& request_hash) const;
  void append(const TranscriptRecord& record);
  std::size_t size() const;
  const std::string& path() const { return path_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string path_;
};

// Serves previously recorded responses by request hash. Unknown hash ->
// ReplayMissError.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(std::shared_ptr<TranscriptStore> store);
  ModelResponse complete(const ModelRequest& request) override;
  std::string id() const override;

 private:
  std::shared_ptr<TranscriptStore> store_;
};

}  // namespace care
