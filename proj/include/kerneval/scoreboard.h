#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kerneval/records.h"

namespace kerneval {

enum class PassAtKMode { Unbiased, FirstK, Default };
PassAtKMode parse_pass_at_k_mode(const std::string& text);
const char* pass_at_k_mode_name(PassAtKMode m);

struct TaskScore {
  std::string task_id;
  std::string level;
  double score = 0.0;  // 0..100, Eq. 1 on the designated candidate
  std::map<int, double> cr_pass_at;
  std::map<int, double> er_pass_at;
  std::optional<double> speedup;  // absent when no candidate passed precision
  int n = 0;
  int compile_passes = 0;
  int precision_passes = 0;
};

struct LevelScore {
  std::string level;
  double mean_score = 0.0;
  std::map<int, double> mean_cr;
  std::map<int, double> mean_er;
  double mean_speedup = 0.0;  // failing tasks count as 0.0
  int n_tasks = 0;
};

struct ScoreWeights {
  double w1 = 0.2;
  double w2 = 0.3;
  double w3 = 0.5;
};

struct ScoreReport {
  std::vector<TaskScore> per_task;
  std::vector<LevelScore> per_level;  // L1, L2, L3 order; only levels present
  double total_score = 0.0;
  ScoreWeights weights;
  int n = 0;
  std::vector<int> k_list;
  PassAtKMode mode_used = PassAtKMode::Default;
};

// Eq. 1: 100 * passed/total for the designated scoring candidate (most
// passing cases, ties to the lowest sample index).
double score_task(const std::vector<EvalRecord>& task_records);

// Eq. 2: unweighted arithmetic mean.
double score_level(const std::vector<double>& task_scores);

// Eq. 3: w1*L1 + w2*L2 + w3*L3.
double score_total(double l1, double l2, double l3, const ScoreWeights& w);

// Unbiased estimator 1 - C(n-c,k)/C(n,k), or first-k over ordered pass bits.
// Default mode: unbiased when n > k, first_k when n == k. first_k needs the
// bits unless k == n (where it reduces to c > 0).
double pass_at_k(int n, int c, int k, PassAtKMode mode = PassAtKMode::Unbiased,
                 std::span<const bool> bits = {});

ScoreReport aggregate(const std::filesystem::path& run_dir, const std::vector<int>& k_list,
                      const ScoreWeights& weights, PassAtKMode mode = PassAtKMode::Default);

enum class ReportFormat { TableText, Records };
std::string render_report(const ScoreReport& report, ReportFormat format);
void emit_report(const ScoreReport& report, ReportFormat format,
                 const std::filesystem::path& out_path);
ScoreReport parse_report_records(const std::string& jsonl);

}  // namespace kerneval
