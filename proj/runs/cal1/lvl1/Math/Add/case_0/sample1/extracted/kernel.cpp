#include "kernel_shim.h"

extern "C" void run_kernel(const kshim::Tensor* inputs, int32_t n_inputs,
                           kshim::Tensor* outputs, int32_t n_outputs,
                           const kshim::Attr* attrs, int32_t n_attrs,
                           const kshim::TilingParams* tiling)
{
    const float* x = kshim::in_f32(inputs[0]);
    const float* y = kshim::in_f32(inputs[1]);
    float* z = kshim::out_f32(outputs[0]);
    Add(z, x, y, outputs[0].numel);
}