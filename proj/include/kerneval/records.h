#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kerneval/task.h"
#include "kerneval/toolchain.h"

namespace kerneval {

enum class Stage { Generate, Extract, Compile, Precision, Performance };
constexpr int kStageCount = 5;
const char* stage_name(Stage s);

enum class StageStatus { Pass, Fail, Skip };
const char* stage_status_name(StageStatus s);

struct StageOutcome {
  Stage stage = Stage::Generate;
  StageStatus status = StageStatus::Skip;
  double duration_ms = 0.0;
  std::string log_path;  // relative to the run directory
  std::string detail;
};

struct EvalRecord {
  std::string task_id;
  std::string level;
  std::string category;
  int sample_index = 0;
  std::vector<StageOutcome> stages;  // fixed order: the five stages above
  std::vector<bool> case_pass;
  std::optional<LatencyStats> latency;
  std::optional<double> speedup;
  int64_t ts_ms = 0;  // wall-clock stamp, zeroed by normalization

  bool stage_passed(Stage s) const;
  const StageOutcome& stage_outcome(Stage s) const;
};

std::string record_to_json(const EvalRecord& r);
EvalRecord record_from_json(const std::string& line, int lineno = 0);

// Strips wall-clock noise (ts_ms, per-stage duration_ms) so determinism
// checks can compare records byte-for-byte.
std::string normalize_record_line(const std::string& line);
std::string normalize_records_text(const std::string& jsonl);

std::vector<EvalRecord> read_records_file(const std::filesystem::path& path);

}  // namespace kerneval
