#pragma once

#include <string>
#include <vector>

#include "kerneval/task.h"
#include "kerneval/tensor.h"

namespace kerneval {

struct PrecisionResult {
  bool is_accurate = true;
  std::vector<double> abs_diffs;
  std::vector<double> rel_diffs;

  double max_abs() const;
  double max_rel() const;
};

// Element-wise comparison of golden vs. produced tensor lists. A pair fails
// only when some element exceeds BOTH the absolute and the relative
// threshold; rel_diff uses |golden| + 1e-7 in the denominator. Any NaN in
// the produced tensors fails the check outright.
PrecisionResult check_precision(const std::vector<TensorData>& golden,
                                const std::vector<TensorData>& produced, double max_abs,
                                double max_rel);

// Case override beats the per-dtype default.
Tolerance select_tolerance(Dtype dtype, const TolerancePolicy& policy,
                           const std::string& case_id);

// reference / generated; > 1 means the candidate beat the reference.
double speedup(double t_ref_ms, double t_gen_ms);

}  // namespace kerneval
