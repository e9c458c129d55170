#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kerneval/prompt.h"

namespace kerneval {

struct EndpointConfig {
  std::string url;    // e.g. http://127.0.0.1:8080/v1/chat/completions
  std::string model;
  std::string api_key;  // from the environment, never from config files
};

struct GenRequest {
  PromptBundle prompt;
  int n_samples = 1;
  double temperature = 0.8;
  double top_p = 0.95;
  int max_tokens = 4096;
  int64_t timeout_ms = 30000;
  int max_retries = 2;
};

struct GenFailure {
  int sample_index = 0;
  int attempt = 0;
  std::string reason;
};

struct GenResult {
  // One entry per requested sample; nullopt where every retry failed. A
  // missing sample becomes a generation-stage failure, never a run abort.
  std::vector<std::optional<std::string>> raw_outputs;
  int attempts = 0;
  std::vector<GenFailure> failures;
};

struct TransportResponse {
  int status = 0;        // 0 means transport-level failure
  std::string body;
  std::string error;     // populated on transport failure
};

// Seam for tests: the HTTP layer behind request_samples.
using Transport = std::function<TransportResponse(const EndpointConfig&, const std::string& body,
                                                  int64_t timeout_ms)>;

Transport http_transport();

// Injectable clock so retry/backoff tests run without real sleeping.
using SleepFn = std::function<void(int64_t ms)>;

// Backoff: base 500 ms, doubled per attempt, +/-20% deterministic jitter.
int64_t backoff_delay_ms(int attempt, uint64_t jitter_seed);

// Requests n_samples completions, each independently retried on transport
// errors and 5xx statuses. Partial success is normal.
GenResult request_samples(const GenRequest& r, const EndpointConfig& endpoint,
                          const Transport& transport = http_transport(),
                          const SleepFn& sleep_fn = {});

// Builds the chat-completion JSON body for one sample.
std::string build_completion_request(const GenRequest& r, const EndpointConfig& endpoint);
// Pulls the first choice's text out of a chat-completion response body.
std::optional<std::string> parse_completion_response(const std::string& body);

// Deterministic generator: replays fixture files
// <fixture_dir>/<task_id>/sample<i>.txt, cycling when fewer than n exist.
// A fixture whose entire content is the outage sentinel below records a
// generation failure for that sample (fault-injection hook for tests).
GenResult scripted_generate(const std::filesystem::path& fixture_dir, const std::string& task_id,
                            int n);

inline constexpr const char* kGeneratorOutageSentinel = "##GENERATOR_OUTAGE##";

}  // namespace kerneval
