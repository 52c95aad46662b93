// Copyright 2026 The Kotoba Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Suite aggregation: the plain average and the average that leaves out
// flagged tasks.

#ifndef KOTOBA_EVAL_AGGREGATE_H_
#define KOTOBA_EVAL_AGGREGATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kotoba::eval {

inline constexpr int kSuiteReportVersion = 1;

struct MetricResult {
  std::string task_name;
  std::string metric_name;
  int n_shots = 0;
  double value = 0.0;  // 0..100
  int instance_count = 0;
  int failures = 0;  // scorer failures counted as wrong (lenient runs)
  bool excluded_from_7avg = false;

  bool operator==(const MetricResult&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<MetricResult> results;
  double avg = 0.0;
  // Mean over tasks not excluded; present when any task is excluded.
  std::optional<double> avg_excl;

  bool operator==(const SuiteReport&) const = default;
};

// Unrounded means. Throws InvalidArgumentError for an empty list, a value
// outside [0, 100], or a list where every task is excluded.
SuiteReport Aggregate(std::vector<MetricResult> results,
                      std::string suite_name = "");

// Half-up rounding at `decimals` places for display. A value within 1e-9
// of a tie (in units of the last kept place) counts as the tie, so 62.825
// rounds to 62.83 although its binary representation is slightly below.
double RoundHalfUp(double value, int decimals = 2);
std::string FormatValue(double value);  // RoundHalfUp, two decimals

// {"version": 1, "suite", "tasks": [{"name", "metric", "shots", "value",
//  "instances", "failures", "excluded_from_7avg"}], "avg", "avg_display",
//  "avg_excl", "avg_excl_display"}
std::string SerializeSuiteReport(const SuiteReport& report);

// Fixed-width table: one row per task, then Avg and, when present, the
// average without excluded tasks labelled "<n>-Avg".
std::string FormatSuiteTable(const SuiteReport& report);

// Reads {"tasks": [{"name", "metric", "shots", "value",
// "excluded_from_7avg"}]}, which also accepts a serialized SuiteReport.
// Throws FormatError.
std::vector<MetricResult> ParseMetricResults(std::string_view content);

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_AGGREGATE_H_
