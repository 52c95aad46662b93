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

#include "kotoba/eval/aggregate.h"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kotoba/errors.h"

namespace kotoba::eval {
namespace {

using Json = nlohmann::ordered_json;

}  // namespace

SuiteReport Aggregate(std::vector<MetricResult> results,
                      std::string suite_name) {
  if (results.empty()) {
    throw InvalidArgumentError("cannot aggregate an empty result list");
  }
  double sum = 0.0;
  double sum_kept = 0.0;
  size_t kept = 0;
  for (const MetricResult& r : results) {
    if (!(r.value >= 0.0 && r.value <= 100.0)) {
      throw InvalidArgumentError("task '" + r.task_name +
                                 "' has a value outside [0, 100]");
    }
    sum += r.value;
    if (!r.excluded_from_7avg) {
      sum_kept += r.value;
      ++kept;
    }
  }
  SuiteReport report;
  report.suite = std::move(suite_name);
  report.avg = sum / static_cast<double>(results.size());
  if (kept != results.size()) {
    if (kept == 0) {
      throw InvalidArgumentError(
          "every task is excluded; the reduced average is undefined");
    }
    report.avg_excl = sum_kept / static_cast<double>(kept);
  }
  report.results = std::move(results);
  return report;
}

double RoundHalfUp(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

std::string FormatValue(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", RoundHalfUp(value, 2));
  return buf;
}

std::string SerializeSuiteReport(const SuiteReport& report) {
  Json j;
  j["version"] = kSuiteReportVersion;
  j["suite"] = report.suite;
  Json tasks = Json::array();
  for (const MetricResult& r : report.results) {
    Json t;
    t["name"] = r.task_name;
    t["metric"] = r.metric_name;
    t["shots"] = r.n_shots;
    t["value"] = r.value;
    t["instances"] = r.instance_count;
    t["failures"] = r.failures;
    t["excluded_from_7avg"] = r.excluded_from_7avg;
    tasks.push_back(std::move(t));
  }
  j["tasks"] = std::move(tasks);
  j["avg"] = report.avg;
  j["avg_display"] = FormatValue(report.avg);
  if (report.avg_excl) {
    j["avg_excl"] = *report.avg_excl;
    j["avg_excl_display"] = FormatValue(*report.avg_excl);
  } else {
    j["avg_excl"] = nullptr;
    j["avg_excl_display"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string FormatSuiteTable(const SuiteReport& report) {
  size_t width = 8;
  for (const MetricResult& r : report.results) {
    width = std::max(width, r.task_name.size() + 2);
  }
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s %-8s %5s %8s\n",
                static_cast<int>(width), "task", "metric", "shots", "value");
  out += line;
  for (const MetricResult& r : report.results) {
    std::snprintf(line, sizeof(line), "%-*s %-8s %5d %8s\n",
                  static_cast<int>(width), r.task_name.c_str(),
                  r.metric_name.c_str(), r.n_shots,
                  FormatValue(r.value).c_str());
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-*s %-8s %5s %8s\n",
                static_cast<int>(width), "Avg", "", "",
                FormatValue(report.avg).c_str());
  out += line;
  if (report.avg_excl) {
    size_t kept = 0;
    for (const MetricResult& r : report.results) kept += !r.excluded_from_7avg;
    const std::string label = std::to_string(kept) + "-Avg";
    std::snprintf(line, sizeof(line), "%-*s %-8s %5s %8s\n",
                  static_cast<int>(width), label.c_str(), "", "",
                  FormatValue(*report.avg_excl).c_str());
    out += line;
  }
  return out;
}

std::vector<MetricResult> ParseMetricResults(std::string_view content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("results are not valid JSON: ") + e.what());
  }
  std::vector<MetricResult> results;
  try {
    for (const Json& t : j.at("tasks")) {
      MetricResult r;
      r.task_name = t.at("name").get<std::string>();
      r.metric_name = t.value("metric", "");
      r.n_shots = t.value("shots", 0);
      r.value = t.at("value").get<double>();
      r.instance_count = t.value("instances", 0);
      r.failures = t.value("failures", 0);
      r.excluded_from_7avg = t.value("excluded_from_7avg", false);
      results.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("results: ") + e.what());
  }
  return results;
}

}  // namespace kotoba::eval
