#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kerneval/generator.h"
#include "kerneval/records.h"
#include "kerneval/rng.h"
#include "kerneval/task.h"

namespace kerneval {

enum class ErrorCategory {
  ApiSignatureOverload,
  DataTypeConversion,
  VariableScopeLifetime,
  MemoryObjectUsage,
  SyntaxStructure,
  MacroPreprocessing,
  Unclassified,
};
constexpr int kErrorCategoryCount = 7;

const char* error_category_ident(ErrorCategory c);    // enum-style name
const char* error_category_display(ErrorCategory c);  // report label
ErrorCategory parse_error_category(const std::string& ident);

// Ordered rule table over the lowercased log; first match wins, no match is
// Unclassified. Total over arbitrary text.
ErrorCategory classify_error(const std::string& log_text);

struct CategoryStat {
  int count = 0;
  double share = 0.0;
};

// Distribution over compile-failed records only; shares sum to 1 across the
// returned map (each failure lands in exactly one category).
std::map<ErrorCategory, CategoryStat> error_distribution(const std::filesystem::path& run_dir);

enum class CorrectionStatus { ReportOnly, Synthesized, Rejected };
const char* correction_status_name(CorrectionStatus s);

struct CorrectionSample {
  std::string task_id;
  int sample_index = 0;
  std::string error_excerpt;
  std::string code_context;
  std::string api_reference;
  std::string report_md;
  std::optional<std::string> reasoning;
  std::optional<std::string> corrected_code;
  ErrorCategory category = ErrorCategory::Unclassified;
  CorrectionStatus status = CorrectionStatus::ReportOnly;
};

// Diagnostic report for one compile failure: first error block of the log,
// the candidate's extracted code, and the API section whose heading shares
// tokens with the error symbols (full description when nothing matches).
CorrectionSample build_diagnostic_report(const EvalRecord& record, const TaskSpec& task,
                                         const std::filesystem::path& run_dir);

// Sends the report to a completion endpoint and parses <think> plus a code
// payload back into the sample. Unparseable responses mark it Rejected.
CorrectionSample synthesize_correction(CorrectionSample sample, const EndpointConfig& endpoint,
                                       const Transport& transport, int64_t timeout_ms = 60000);

// Records with compile = pass and precision = fail, canonical order.
std::vector<EvalRecord> harvest_precision_failures(const std::filesystem::path& run_dir);

// Reconstruction prompt: task API description, the erroneous code with
// reasoning traces removed, the ground-truth reference, and the instruction
// to emit fresh <think> / <kernel_impl> blocks.
std::string build_reconstruction_prompt(const std::string& api_description,
                                        const std::string& erroneous_code,
                                        const std::string& golden_impl);

struct PreferenceSide {
  std::string think;
  std::string code;
};

struct PreferencePair {
  std::string task_id;
  std::string prompt;
  PreferenceSide chosen;
  PreferenceSide rejected;
  int chosen_sample = 0;
  int rejected_sample = 0;
};

// Chosen: compile and precision both pass. Rejected: compile passes,
// precision fails. Pairs are lexicographic by (chosen, rejected) sample
// index, capped per task.
std::vector<PreferencePair> build_preference_pairs(const std::filesystem::path& run_dir,
                                                   int pairs_per_task = 4);

// True iff every gold key exists in the candidate with an equal value.
// Integral gold values compare exactly; others within 1e-9. Extra candidate
// keys are ignored.
bool verify_tiling_summary(const std::map<std::string, double>& candidate,
                           const std::map<std::string, double>& gold);

struct Milestone {
  std::string name;  // parsed | compiled | precise | perf_target
  bool achieved = false;
  double reward = 0.0;
};

struct RewardTrace {
  std::string task_id;
  int sample_index = 0;
  std::vector<Milestone> milestones;  // fixed order above
  double total = 0.0;
};

struct RewardConfig {
  double parsed = 0.0;
  double compiled = 0.0;
  double precise = 0.0;
  double perf_target = 0.0;
};

// Milestones form a prefix of the fixed order: a record cannot be precise
// without having compiled.
RewardTrace reward_trace(const EvalRecord& record, const RewardConfig& rewards,
                         double perf_threshold);

// Per key: uniform seeded subsample when over quota, round-robin
// replication when under (only if augment). Deterministic in (seed, input
// order).
template <typename T, typename KeyFn>
std::vector<T> balance_samples(const std::vector<T>& samples, size_t quota_per_key, KeyFn key_fn,
                               uint64_t seed, bool augment) {
  std::map<std::string, std::vector<size_t>> by_key;
  std::vector<std::string> key_order;
  for (size_t i = 0; i < samples.size(); ++i) {
    const std::string key = key_fn(samples[i]);
    if (!by_key.count(key)) key_order.push_back(key);
    by_key[key].push_back(i);
  }
  std::vector<T> out;
  for (const auto& key : key_order) {
    auto& idxs = by_key[key];
    if (idxs.size() > quota_per_key) {
      // Seeded Fisher-Yates prefix, then restore input order.
      const CounterRng rng(seed, CounterRng::hash_stream(key, 0));
      std::vector<size_t> pool = idxs;
      std::vector<size_t> chosen;
      for (size_t i = 0; i < quota_per_key; ++i) {
        const size_t j = i + static_cast<size_t>(rng.uniform_int(
                                 i, 0, static_cast<int64_t>(pool.size() - i) - 1));
        std::swap(pool[i], pool[j]);
        chosen.push_back(pool[i]);
      }
      std::sort(chosen.begin(), chosen.end());
      for (const size_t i : chosen) out.push_back(samples[i]);
    } else if (idxs.size() < quota_per_key && augment && !idxs.empty()) {
      for (size_t i = 0; i < quota_per_key; ++i) {
        out.push_back(samples[idxs[i % idxs.size()]]);
      }
    } else {
      for (const size_t i : idxs) out.push_back(samples[i]);
    }
  }
  return out;
}

struct FoundryConfig {
  RewardConfig rewards;
  double perf_threshold = 1.0;
  int pairs_per_task = 4;
  std::filesystem::path gt_dir;
  bool offline = true;
  EndpointConfig endpoint;
  std::optional<double> min_failure_rate;  // optional Alg-1 style filter
};

struct FoundryOutput {
  int correction_samples = 0;
  int preference_pairs = 0;
  int reward_traces = 0;
  std::filesystem::path out_dir;
};

// Writes feedback/{correction_samples.jsonl, preference_pairs.jsonl,
// reward_traces.jsonl, error_distribution.txt} under run_dir.
FoundryOutput export_feedback(const std::filesystem::path& run_dir, const TaskSuite& suite,
                              const FoundryConfig& cfg,
                              const Transport& transport = http_transport());

}  // namespace kerneval
