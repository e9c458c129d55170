#include "kernel_shim.h"

extern "C" void run_kernel(const kshim::Tensor* inputs, int32_t n_inputs,
                           kshim::Tensor* outputs, int32_t n_outputs,
                           const kshim::Attr* attrs, int32_t n_attrs,
                           const kshim::TilingParams* tiling)
{
    const float* a = kshim::in_f32(inputs[0]);
    const float* b = kshim::in_f32(inputs[1]);
    float* c = kshim::out_f32(outputs[0]);
    const int64_t m = tiling->loop_count;
    const int64_t n = tiling->tile_len;
    const int64_t k = tiling->tail_len;
    for (int64_t i = 0; i < m; ++i) {
        for (int64_t j = 0; j < n; ++j) {
            double acc = 0.0;  // wide accumulator, rounded once at the store
            for (int64_t p = 0; p < k; ++p) {
                acc += static_cast<double>(a[i * k + p]) * static_cast<double>(b[p * n + j]);
            }
            c[i * n + j] = static_cast<float>(acc);
        }
    }
}
// ---- host ----
#include "kernel_shim.h"

extern "C" void compute_tiling(const kshim::Tensor* inputs, int32_t n_inputs,
                               kshim::TilingParams* tiling)
{
    const int64_t m = inputs[0].shape[0];
    const int64_t k = inputs[0].shape[1];
    const int64_t n = inputs[1].shape[1];
    tiling->block_dim = 1;
    tiling->tile_len = n;   // columns of C
    tiling->tail_len = k;   // inner dimension
    tiling->loop_count = m; // rows of C
}
