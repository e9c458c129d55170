#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kerneval/tensor.h"

namespace kerneval {

enum class Level { L1, L2, L3 };
enum class ShapeMode { Static, Dynamic };
enum class EvalPath { DeviceOnly, HostDevice };

Level parse_level(const std::string& text);
const char* level_name(Level l);
int level_index(Level l);  // 0, 1, 2
Level level_from_index(int idx);
ShapeMode parse_shape_mode(const std::string& text);
const char* shape_mode_name(ShapeMode m);
EvalPath parse_eval_path(const std::string& text);
const char* eval_path_name(EvalPath p);

// One tensor input of a test case: either deterministic seeded data over a
// range, or literal values.
struct InputSpec {
  std::vector<int64_t> shape;
  Dtype dtype = Dtype::F32;
  bool seeded = true;
  int64_t seed = 0;
  double range_lo = -1.0;
  double range_hi = 1.0;
  std::vector<double> literal;
};

struct Tolerance {
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
};

struct TolerancePolicy {
  std::map<Dtype, Tolerance> per_dtype;
  std::map<std::string, Tolerance> overrides;  // keyed by case_id
};

struct TestCase {
  std::string case_id;
  Dtype dtype = Dtype::F32;  // dtype shared by the case's inputs
  std::vector<InputSpec> input_specs;
  std::map<std::string, double> attrs;
  std::optional<double> reference_latency_ms;
};

struct TaskSpec {
  std::string task_id;
  Level level = Level::L1;
  std::string category;
  std::string task_name;
  ShapeMode shape_mode = ShapeMode::Static;
  EvalPath eval_path = EvalPath::DeviceOnly;
  std::string api_description;
  std::string host_template;
  std::string kernel_template;
  std::optional<std::string> tiling_header_template;
  std::vector<TestCase> test_cases;
  TolerancePolicy tolerance_policy;
  std::string reference_op;
  std::string source_dir;  // manifest directory, for error messages

  // `lvl1_categoryMath_Sqrt` style tag used for log file names.
  std::string tag() const;
};

using TaskSuite = std::vector<TaskSpec>;

}  // namespace kerneval
