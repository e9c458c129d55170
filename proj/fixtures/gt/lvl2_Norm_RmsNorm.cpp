#include "kernel_shim.h"
#include <cmath>

extern "C" void run_kernel(const kshim::Tensor* inputs, int32_t n_inputs,
                           kshim::Tensor* outputs, int32_t n_outputs,
                           const kshim::Attr* attrs, int32_t n_attrs,
                           const kshim::TilingParams* tiling)
{
    const float* x = kshim::in_f32(inputs[0]);
    const float* gamma = kshim::in_f32(inputs[1]);
    float* y = kshim::out_f32(outputs[0]);
    const double eps = kshim::attr_or(attrs, n_attrs, "eps", 1e-6);
    const int64_t h = tiling->tile_len;
    const int64_t rows = tiling->loop_count;
    for (int64_t r = 0; r < rows; ++r) {
        double sumsq = 0.0;
        for (int64_t j = 0; j < h; ++j) {
            const double v = x[r * h + j];
            sumsq += v * v;
        }
        const double inv = 1.0 / std::sqrt(sumsq / static_cast<double>(h) + eps);
        for (int64_t j = 0; j < h; ++j) {
            y[r * h + j] = static_cast<float>(x[r * h + j] * inv * gamma[j]);
        }
    }
}
// ---- host ----
#include "kernel_shim.h"

extern "C" void compute_tiling(const kshim::Tensor* inputs, int32_t n_inputs,
                               kshim::TilingParams* tiling)
{
    const int64_t h = inputs[0].shape[inputs[0].rank - 1];
    tiling->block_dim = 1;
    tiling->tile_len = h;                      // row width
    tiling->tail_len = 0;
    tiling->loop_count = inputs[0].numel / h;  // row count
}
