#include "kernel_shim.h"

extern "C" void run_kernel(const kshim::Tensor* inputs, int32_t n_inputs,
                           kshim::Tensor* outputs, int32_t n_outputs,
                           const kshim::Attr* attrs, int32_t n_attrs,
                           const kshim::TilingParams* tiling)
{
    const int32_t* x = kshim::in_i32(inputs[0]);
    const int32_t* y = kshim::in_i32(inputs[1]);
    int32_t* z = kshim::out_i32(outputs[0]);
    const int64_t n = outputs[0].numel;
    for (int64_t i = 0; i < n; ++i) {
        z[i] = (x[i] != y[i]) ? 1 : 0;
    }
}