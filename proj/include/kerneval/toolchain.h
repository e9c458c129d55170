#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kerneval/prompt.h"
#include "kerneval/task.h"
#include "kerneval/tensor.h"

namespace kerneval {

struct CompileVerdict {
  bool success = false;
  std::string log_text;
  std::filesystem::path log_path;
  double duration_ms = 0.0;
};

enum class RunStatus { Ok, RuntimeError, Timeout, Crashed };
const char* run_status_name(RunStatus s);

struct RunVerdict {
  RunStatus status = RunStatus::RuntimeError;
  std::optional<std::vector<TensorData>> outputs;
  std::string diagnostics;
};

struct LatencyStats {
  int warmup = 0;
  int runs = 0;
  std::vector<double> per_run_ms;
  double mean_ms = 0.0;
};

LatencyStats make_latency_stats(int warmup, std::vector<double> per_run_ms);

struct MeasureOutcome {
  bool ok = false;
  LatencyStats stats;
  std::string diagnostics;
};

struct TensorSpec {
  Dtype dtype = Dtype::F32;
  std::vector<int64_t> shape;
};

// Everything a backend needs to run one test case. `golden` is only read by
// the mock backend when replaying scripted deltas; the local backend ignores
// it.
struct CaseData {
  std::string case_id;
  int case_index = 0;
  std::vector<TensorData> inputs;
  std::vector<TensorSpec> out_specs;
  std::vector<TensorData> golden;
  std::filesystem::path input_file;  // pre-marshaled inputs; empty -> marshal ad hoc
};

struct Artifact {
  std::filesystem::path binary;
  std::string task_id;
  int sample_index = 0;
  EvalPath eval_path = EvalPath::DeviceOnly;
};

struct ToolchainLimits {
  int64_t compile_ms = 60000;
  int64_t exec_ms = 10000;
};

// Turns candidate code into a runnable artifact, executes it, and measures
// latency. execute/measure must only see compile-passed artifacts.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual CompileVerdict compile(const std::filesystem::path& workspace, const Candidate& c,
                                 const TaskSpec& t, Artifact& artifact_out) = 0;
  virtual RunVerdict execute(const Artifact& artifact, const CaseData& cas) = 0;
  virtual MeasureOutcome measure(const Artifact& artifact, const CaseData& cas, int warmup,
                                 int runs) = 0;
};

// Compiles candidates with the system C++ compiler against the harness shim
// and runs them in isolated worker processes with wall-clock limits.
class LocalCcBackend : public Backend {
 public:
  explicit LocalCcBackend(ToolchainLimits limits);
  CompileVerdict compile(const std::filesystem::path& workspace, const Candidate& c,
                         const TaskSpec& t, Artifact& artifact_out) override;
  RunVerdict execute(const Artifact& artifact, const CaseData& cas) override;
  MeasureOutcome measure(const Artifact& artifact, const CaseData& cas, int warmup,
                         int runs) override;

  static std::string compiler_command();

 private:
  ToolchainLimits limits_;
};

struct MockEntry {
  bool compile_ok = false;
  std::string compile_log;
  RunStatus run_status = RunStatus::Ok;
  std::string diagnostics;
  // Delta applied to the golden outputs of one case; index -1 means exact.
  int delta_case = -1;
  int64_t delta_elem = 0;
  double delta = 0.0;
  std::vector<double> per_run_ms;
};

// Replays a line-oriented script keyed by `task_id/sampleN`. Unscripted keys
// default to compile failure.
class MockBackend : public Backend {
 public:
  explicit MockBackend(const std::filesystem::path& script_path);
  CompileVerdict compile(const std::filesystem::path& workspace, const Candidate& c,
                         const TaskSpec& t, Artifact& artifact_out) override;
  RunVerdict execute(const Artifact& artifact, const CaseData& cas) override;
  MeasureOutcome measure(const Artifact& artifact, const CaseData& cas, int warmup,
                         int runs) override;

  static std::map<std::string, MockEntry> parse_script(const std::filesystem::path& path);

 private:
  const MockEntry* find(const std::string& task_id, int sample_index) const;
  std::map<std::string, MockEntry> entries_;
};

// Marshal format shared with the embedded runner. Inputs plus output specs
// plus attrs go in; produced tensors come back.
void write_case_input_file(const std::filesystem::path& path,
                           const std::vector<TensorData>& inputs,
                           const std::vector<TensorSpec>& out_specs,
                           const std::map<std::string, double>& attrs, bool wants_tiling);
std::vector<TensorData> read_output_file(const std::filesystem::path& path);

}  // namespace kerneval
