#pragma once

namespace kerneval {

// Harness-side sources materialized into every candidate workspace: the shim
// header defining the kernel ABI, and the runner that marshals tensors in
// and out of the compiled artifact.
extern const char* const kKernelShimHeader;
extern const char* const kKernelRunnerSource;

}  // namespace kerneval
