#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kerneval {

enum class Dtype { F16, F32, I32, I64 };

Dtype parse_dtype(const std::string& name);
const char* dtype_name(Dtype d);
bool dtype_is_integer(Dtype d);

// Rounds a float64 value to the given dtype's representable set. Float
// values snap through the target precision; integers truncate toward zero.
double snap_to_dtype(double value, Dtype d);

// Dtype-tagged flat buffer. Values are always stored as float64; the dtype
// says which representable set they live in (f16 entries are the widened
// nearest-half values, integer entries are exact).
struct TensorData {
  Dtype dtype = Dtype::F32;
  std::vector<int64_t> shape;
  std::vector<double> values;

  int64_t numel() const;

  // Validates shape positivity and len(values) == product(shape).
  void check() const;

  // Returns a copy with every value snapped to `dtype`.
  TensorData snapped() const;
};

int64_t shape_numel(const std::vector<int64_t>& shape);
std::string shape_to_string(const std::vector<int64_t>& shape);

}  // namespace kerneval
