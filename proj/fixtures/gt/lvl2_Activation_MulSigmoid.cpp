#include "kernel_shim.h"
#include <cmath>

extern "C" void run_kernel(const kshim::Tensor* inputs, int32_t n_inputs,
                           kshim::Tensor* outputs, int32_t n_outputs,
                           const kshim::Attr* attrs, int32_t n_attrs,
                           const kshim::TilingParams* tiling)
{
    const float* x = kshim::in_f32(inputs[0]);
    float* y = kshim::out_f32(outputs[0]);
    const int64_t n = outputs[0].numel;
    for (int64_t i = 0; i < n; ++i) {
        const double v = x[i];
        y[i] = static_cast<float>(v / (1.0 + std::exp(-v)));
    }
}
