#include "kernel_shim.h"
#include <algorithm>
#include <numeric>
#include <vector>

extern "C" void run_kernel(const kshim::Tensor* inputs, int32_t n_inputs,
                           kshim::Tensor* outputs, int32_t n_outputs,
                           const kshim::Attr* attrs, int32_t n_attrs,
                           const kshim::TilingParams* tiling)
{
    const float* x = kshim::in_f32(inputs[0]);
    float* values = kshim::out_f32(outputs[0]);
    int32_t* indices = kshim::out_i32(outputs[1]);
    const int64_t n = inputs[0].numel;
    const int64_t k = outputs[0].numel;
    std::vector<int32_t> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int32_t l, int32_t r) { return x[l] > x[r]; });
    for (int64_t j = 0; j < k; ++j) {
        values[j] = x[order[static_cast<size_t>(j)]];
        indices[j] = order[static_cast<size_t>(j)];
    }
}
// ---- host ----
#include "kernel_shim.h"

extern "C" void compute_tiling(const kshim::Tensor* inputs, int32_t n_inputs,
                               kshim::TilingParams* tiling)
{
    tiling->block_dim = 1;
    tiling->tile_len = inputs[0].numel;
    tiling->tail_len = 0;
    tiling->loop_count = 1;
}
