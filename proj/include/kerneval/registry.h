#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kerneval/task.h"

namespace kerneval {

// Loads the benchmark suite from a manifest tree:
//   <root>/tasks/lvl<1|2|3>/<Category>/<TaskName>/
//     task.toml  api_desc.md  host_template.txt  kernel_template.txt
//     [tiling_template.txt]
// Tasks come back sorted by (level, category, task_id) and validated.
TaskSuite load_manifest(const std::filesystem::path& root);

// Exhaustive invariant check; returns every violation, not the first.
std::vector<std::string> validate_task(const TaskSpec& t);

// Reference evaluators run in float64 and round to the output dtype once at
// the end; matmul keeps its accumulator wide regardless of the I/O dtype.
std::vector<TensorData> reference_eval(const std::string& op_name,
                                       const std::vector<TensorData>& inputs,
                                       const std::map<std::string, double>& attrs);

bool is_registered_reference_op(const std::string& op_name);
std::vector<std::string> registered_reference_ops();

// Deterministic test data for one case. Inputs depend only on (task, case,
// seed); golden comes from the registered reference op. Materialized golden
// values are cached; racing materializations write identical content.
class TestDataResolver {
 public:
  explicit TestDataResolver(const TaskSpec& task) : task_(task) {}

  std::pair<std::vector<TensorData>, std::vector<TensorData>> resolve(const TestCase& tc,
                                                                      int64_t seed) const;

  static std::vector<TensorData> make_inputs(const TaskSpec& task, const TestCase& tc,
                                             int64_t seed);

 private:
  const TaskSpec& task_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, int64_t>, std::vector<TensorData>> golden_cache_;
};

}  // namespace kerneval
