#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "kerneval/config.h"
#include "kerneval/generator.h"
#include "kerneval/records.h"
#include "kerneval/registry.h"
#include "kerneval/scoreboard.h"
#include "kerneval/task.h"
#include "kerneval/toolchain.h"

namespace kerneval {

struct Timeouts {
  int64_t compile_ms = 60000;
  int64_t exec_ms = 10000;
  int64_t gen_ms = 30000;
};

struct PerfConfig {
  int warmup = 2;
  int runs = 5;
};

struct RunConfig {
  std::filesystem::path suite_root;
  std::filesystem::path run_dir;
  int n_samples = 1;
  int parallelism = 1;
  int64_t seed = 0;
  std::string backend = "mock";        // local_cc | mock
  std::string generator = "scripted";  // endpoint | scripted
  std::filesystem::path fixture_dir;   // scripted generator fixtures
  std::filesystem::path mock_script;   // mock backend script
  Timeouts timeouts;
  PerfConfig perf;
  ScoreWeights score_weights;
  int gen_max_retries = 2;
  double gen_temperature = 0.8;
  double gen_top_p = 0.95;
  int gen_max_tokens = 4096;
  EndpointConfig endpoint;
  std::string instructions;  // canonical instruction block
  bool resume = false;
};

// Reads the flat `section.key = value` config into a RunConfig. Relative
// paths resolve against base_dir. CLI overrides are applied by the caller
// before this runs.
RunConfig load_run_config(const LineConfig& file, const std::filesystem::path& base_dir);
void validate_run_config(const RunConfig& cfg);

struct RunSummary {
  int n_tasks = 0;
  int n_records = 0;
  int generate_failures = 0;
  int extract_failures = 0;
  int compile_passes = 0;
  int precision_passes = 0;
  std::filesystem::path run_dir;
  std::filesystem::path records_path;
};

// Drives generation, extraction, compilation, precision, and performance
// over every (task, sample) pair with bounded parallelism. Every pair yields
// exactly one EvalRecord in records.jsonl, written in canonical (task,
// sample) order regardless of completion order. Candidate failures of any
// kind become stage outcomes; only configuration problems throw, and they
// throw before any work starts.
RunSummary run_suite(const RunConfig& cfg);

// Everything run_candidate needs besides the task and candidate.
struct CandidateEnv {
  Backend* backend = nullptr;
  const std::vector<CaseData>* cases = nullptr;
  std::filesystem::path sample_dir;  // <task>/case_0/sample<i>
  std::filesystem::path run_dir;
  const TaskSpec* task = nullptr;
  PerfConfig perf;
  StageOutcome generate_outcome;
};

// Stage pipeline for one candidate: extract (already materialized in the
// Candidate), compile, precision over every case, performance on the first
// case. Skip-on-fail; nothing escapes as an exception.
EvalRecord run_candidate(const Candidate& c, CandidateEnv& env);

struct LeakReport {
  std::vector<pid_t> orphan_pids;
  std::vector<std::filesystem::path> stray_files;

  bool empty() const { return orphan_pids.empty() && stray_files.empty(); }
  std::string to_string() const;
};

// Post-run check: no tracked worker processes still alive, no leftovers in
// the run's scratch sentinel directory.
LeakReport cleanup_guard(const std::filesystem::path& run_dir);

// Scratch sentinel location used by cleanup_guard.
std::filesystem::path run_scratch_dir(const std::filesystem::path& run_dir);

}  // namespace kerneval
