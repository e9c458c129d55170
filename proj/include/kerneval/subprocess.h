#pragma once

#include <sys/types.h>

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kerneval {

struct SpawnResult {
  int exit_code = -1;          // valid when exited normally
  int term_signal = 0;         // nonzero when killed by a signal
  bool timed_out = false;
  double duration_ms = 0.0;

  bool ok() const { return !timed_out && term_signal == 0 && exit_code == 0; }
  bool crashed() const { return term_signal != 0 && !timed_out; }
};

struct SpawnOptions {
  std::vector<std::string> argv;  // argv[0] resolved via PATH
  std::optional<std::filesystem::path> cwd;
  std::filesystem::path stdout_path;  // empty -> /dev/null
  std::filesystem::path stderr_path;  // empty -> /dev/null
  int64_t timeout_ms = 0;             // 0 -> no limit
  std::vector<std::pair<std::string, std::string>> env;  // setenv overrides
};

// Forks, execs, and waits with a wall-clock deadline. The child gets its own
// process group; on timeout the whole group is SIGKILLed so grandchildren
// cannot linger. Throws IoError only for harness-side failures (fork/exec
// plumbing); child failures come back in the result.
SpawnResult run_process(const SpawnOptions& opts);

// Every spawned pid is tracked here until reaped; cleanup_guard asks for the
// survivors after a run.
class ProcessRegistry {
 public:
  static ProcessRegistry& instance();
  void track(pid_t pid);
  void untrack(pid_t pid);
  std::vector<pid_t> live_pids() const;

 private:
  ProcessRegistry() = default;
  mutable std::mutex mu_;
  std::vector<pid_t> pids_;
};

bool pid_alive(pid_t pid);

}  // namespace kerneval
