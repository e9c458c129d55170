#pragma once

#include <optional>
#include <string>

#include "kerneval/task.h"

namespace kerneval {

struct PromptBundle {
  std::string instructions;
  std::string api_description;
  std::string host_template;
  std::string kernel_template;
  std::optional<std::string> tiling_header_template;
  EvalPath eval_path = EvalPath::DeviceOnly;
  std::string rendered;
};

struct Candidate {
  std::string task_id;
  int sample_index = 0;
  std::string raw_output;
  std::optional<std::string> think;
  std::optional<std::string> host_code;
  std::optional<std::string> kernel_code;
  std::optional<std::string> tiling_code;
  bool extraction_ok = false;
};

// The canonical instruction block prepended to every prompt. Loaded from
// fixtures/instructions.md by the CLI; tests may inject their own.
std::string default_instructions();

// Renders instructions, API description, then templates, in that fixed
// order. Device-only prompts mark the host template as provided.
PromptBundle assemble_prompt(const TaskSpec& t, const std::string& instructions);

// Recovers structured code from raw model output. Recognition order:
//   1. tagged blocks  <think> <kernel_impl> <host_impl> <tiling_impl>
//   2. fenced code blocks labeled by a preceding heading naming
//      Kernel / Host / Tiling (case-insensitive)
//   3. a single unlabeled fenced block, assigned to the kernel
// Never throws; a failed extraction is extraction_ok = false.
Candidate extract_candidate(const std::string& raw, const TaskSpec& t, int sample_index);

// Canonical emission format used by scripted fixtures; extract_candidate
// round-trips it exactly.
std::string emit_candidate_text(const std::optional<std::string>& think,
                                const std::optional<std::string>& kernel,
                                const std::optional<std::string>& host,
                                const std::optional<std::string>& tiling);

}  // namespace kerneval
