#pragma once

#include <stdexcept>
#include <string>

namespace kerneval {

enum class ErrKind {
  MissingField,
  UnknownDtype,
  DuplicateTaskId,
  UnreadableTemplate,
  ReferenceEvalFailure,
  UnknownOp,
  ShapeMismatch,
  NoFixtures,
  EndpointExhausted,
  MalformedScript,
  CompilerNotFound,
  ConfigError,
  EmptyTask,
  EmptyLevel,
  DomainError,
  CorruptRecord,
  IoError,
  NotAFailure,
  NoGroundTruth,
  NonPositiveLatency,
  LeakDetected,
  Internal,
};

const char* err_kind_name(ErrKind k);

// Single exception type for the whole harness; `kind` selects the CLI exit
// path (config/environment problems vs. internal invariant violations).
class HarnessError : public std::runtime_error {
 public:
  HarnessError(ErrKind kind, const std::string& message)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& message) {
  throw HarnessError(kind, message);
}

}  // namespace kerneval
