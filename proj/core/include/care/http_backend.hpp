#pragma once

#include <memory>
#include <string>

#include "care/backend.hpp"

namespace care {

// Generic chat-completion wire client. One configurable shape (endpoint,
// model, auth header) instead of per-vendor adapters; images travel inline
// as base64 data URLs and the reply text is read from the first candidate.
struct HttpBackendConfig {
  std::string endpoint_url;           // e.g. https://host/v1/chat/completions
  std::string model_name;
  std::string auth_env_var;           // env var holding the token; may be empty
  std::string auth_header = "Authorization";
  std::string auth_prefix = "Bearer ";
  std::uint32_t max_attempts = 3;     // total attempts per request
  std::uint32_t backoff_base_ms = 250;
  std::uint32_t backoff_max_ms = 8000;
  std::uint32_t timeout_sec = 120;
  std::uint64_t retry_jitter_seed = 0x5eedULL;
};

class HttpBackend : public Backend {
 public:
  // `store` is optional; when present it is consulted before any network
  // call (provenance=cache on hit) and every live response is appended.
  // The auth token is read from the environment once, here, and never
  // written to disk or transcripts.
  HttpBackend(HttpBackendConfig config, std::shared_ptr<TranscriptStore> store);
  ~HttpBackend() override;

  ModelResponse complete(const ModelRequest& request) override;
  std::string id() const override;

  // Wire message for a request (exposed for tests).
  std::string encode_body(const ModelRequest& request) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace care
