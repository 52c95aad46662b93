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

// Runs tasks against a scorer.

#ifndef KOTOBA_EVAL_RUNNER_H_
#define KOTOBA_EVAL_RUNNER_H_

#include <span>
#include <string>
#include <vector>

#include "kotoba/eval/aggregate.h"
#include "kotoba/eval/scorer.h"
#include "kotoba/eval/task.h"

namespace kotoba::eval {

struct InstanceResult {
  std::string id;
  double value = 0.0;  // 1/0 for acc and em, F1 for rouge-2
  bool failed = false;
  std::string error;
  int chosen_index = -1;   // multiple choice
  std::string prediction;  // generation, after stop-sequence truncation
};

struct RunOptions {
  int workers = 1;
  // Count scorer failures as wrong answers instead of aborting.
  bool lenient = false;
};

struct TaskRun {
  MetricResult metric;
  std::vector<InstanceResult> instances;
};

// value = 100 x mean instance value. Instances may be scored in parallel;
// scorers that are not thread safe see one call at a time. Throws
// InvalidArgumentError for an empty instance list or too few exemplars.
// Unless `lenient`, the first failing instance (in input order) aborts the
// run with a ScorerError naming it.
TaskRun RunTask(ModelScorer& scorer, const TaskSpec& task,
                std::span<const Instance> instances,
                std::span<const Instance> exemplars,
                const RunOptions& options = {});

struct SuiteRun {
  std::vector<TaskRun> tasks;
  SuiteReport report;
};

// Loads each task's data and exemplars, runs it, and aggregates.
SuiteRun RunSuite(ModelScorer& scorer, const Suite& suite,
                  const RunOptions& options = {});

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_RUNNER_H_
