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

#include "kotoba/eval/runner.h"

#include <exception>
#include <mutex>
#include <optional>

#include "kotoba/errors.h"
#include "kotoba/eval/metrics.h"
#include "kotoba/eval/prompt.h"
#include "kotoba/parallel.h"

namespace kotoba::eval {
namespace {

// Serializes calls into a scorer that is not thread safe.
class SerializedScorer : public ModelScorer {
 public:
  explicit SerializedScorer(ModelScorer& inner) : inner_(inner) {}

  double LogLikelihood(std::string_view context,
                       std::string_view continuation) override {
    std::scoped_lock lock(mu_);
    return inner_.LogLikelihood(context, continuation);
  }
  std::string Generate(std::string_view context,
                       std::span<const std::string> stop_sequences,
                       int max_new_tokens) override {
    std::scoped_lock lock(mu_);
    return inner_.Generate(context, stop_sequences, max_new_tokens);
  }
  bool thread_safe() const override { return true; }

 private:
  ModelScorer& inner_;
  std::mutex mu_;
};

InstanceResult ScoreInstance(ModelScorer& scorer, const TaskSpec& task,
                             const Instance& instance,
                             const std::string& prompt) {
  InstanceResult r;
  r.id = instance.id;
  switch (task.task_type) {
    case TaskType::kMultipleChoice: {
      std::vector<std::string> continuations;
      for (const std::string& choice : instance.choices) {
        continuations.push_back(RenderContinuation(task, instance, choice));
      }
      const ChoiceScores scores = ScoreMultipleChoice(
          scorer, prompt, continuations, task.length_normalize);
      r.chosen_index = scores.chosen_index;
      r.value = scores.chosen_index == instance.gold_index ? 1.0 : 0.0;
      break;
    }
    case TaskType::kGenerateEm:
    case TaskType::kGenerateRouge2: {
      r.prediction = TruncateAtStop(
          scorer.Generate(prompt, task.stop_sequences, task.max_new_tokens),
          task.stop_sequences);
      r.value = task.task_type == TaskType::kGenerateEm
                    ? (ExactMatch(r.prediction, instance.references) ? 1.0
                                                                     : 0.0)
                    : Rouge2(r.prediction, instance.references.front(),
                             task.segmenter);
      break;
    }
  }
  return r;
}

}  // namespace

TaskRun RunTask(ModelScorer& scorer, const TaskSpec& task,
                std::span<const Instance> instances,
                std::span<const Instance> exemplars,
                const RunOptions& options) {
  ValidateTask(task);
  if (instances.empty()) {
    throw InvalidArgumentError("task '" + task.name + "' has no instances");
  }
  // Prompt errors are configuration problems; raise them before scoring.
  std::vector<std::string> prompts;
  prompts.reserve(instances.size());
  for (const Instance& instance : instances) {
    prompts.push_back(BuildPrompt(task, instance, exemplars, task.n_shots));
  }

  std::optional<SerializedScorer> serialized;
  ModelScorer* target = &scorer;
  if (!scorer.thread_safe() && options.workers > 1) {
    serialized.emplace(scorer);
    target = &*serialized;
  }

  TaskRun run;
  run.instances.resize(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  ParallelFor(instances.size(), options.workers, [&](size_t i) {
    try {
      run.instances[i] = ScoreInstance(*target, task, instances[i], prompts[i]);
    } catch (const ScorerError&) {
      errors[i] = std::current_exception();
      run.instances[i].id = instances[i].id;
      run.instances[i].failed = true;
    }
  });

  double sum = 0.0;
  for (size_t i = 0; i < instances.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const ScorerError& e) {
        const std::string message =
            "task '" + task.name + "', instance " + instances[i].id + ": " +
            e.what();
        if (!options.lenient) {
          if (dynamic_cast<const BackendUnavailableError*>(&e) != nullptr) {
            throw BackendUnavailableError(message);
          }
          throw ScorerError(message);
        }
        run.instances[i].error = e.what();
      }
      ++run.metric.failures;
      continue;
    }
    sum += run.instances[i].value;
  }
  run.metric.task_name = task.name;
  run.metric.metric_name = task.metric_name;
  run.metric.n_shots = task.n_shots;
  run.metric.instance_count = static_cast<int>(instances.size());
  run.metric.value = 100.0 * sum / static_cast<double>(instances.size());
  run.metric.excluded_from_7avg = task.excluded_from_7avg;
  return run;
}

SuiteRun RunSuite(ModelScorer& scorer, const Suite& suite,
                  const RunOptions& options) {
  SuiteRun run;
  std::vector<MetricResult> results;
  for (const TaskSpec& task : suite.tasks) {
    if (task.data_path.empty()) {
      throw ConfigError("task '" + task.name + "' has no data file");
    }
    const std::vector<Instance> instances =
        LoadInstances(task.data_path, task.task_type);
    const std::vector<Instance> exemplars = ResolveExemplars(task);
    TaskRun task_run = RunTask(scorer, task, instances, exemplars, options);
    results.push_back(task_run.metric);
    run.tasks.push_back(std::move(task_run));
  }
  run.report = Aggregate(std::move(results), suite.name);
  return run;
}

}  // namespace kotoba::eval
