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

// Task and suite definitions for the evaluation harness.

#ifndef KOTOBA_EVAL_TASK_H_
#define KOTOBA_EVAL_TASK_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kotoba::eval {

inline constexpr int kSuiteVersion = 1;

enum class TaskType { kMultipleChoice, kGenerateEm, kGenerateRouge2 };
std::string_view TaskTypeName(TaskType type);
std::optional<TaskType> ParseTaskType(std::string_view name);

// Segmentation units for ROUGE-2.
enum class Segmenter { kChar, kWhitespace };

struct Instance {
  std::string id;
  std::string question;
  std::vector<std::string> choices;     // multiple choice only
  std::vector<std::string> references;  // acceptable answers
  int gold_index = -1;                  // multiple choice only

  // The answer an exemplar shows: the gold choice, else the first reference.
  const std::string& answer() const;

  bool operator==(const Instance&) const = default;
};

// Slots: {question}, {choices} and {answer}. A block for one instance is
// question-template followed by answer-template; blocks are joined by
// `separator`. {choices} renders as "0.first,1.second,...".
struct PromptTemplate {
  std::string question = "{question}\n";
  std::string answer = "{answer}";
  std::string separator = "\n\n";

  bool operator==(const PromptTemplate&) const = default;
};

struct TaskSpec {
  std::string name;
  TaskType task_type = TaskType::kMultipleChoice;
  int n_shots = 0;
  PromptTemplate prompt;
  std::vector<Instance> exemplars;
  std::string exemplars_path;  // loaded on demand when non-empty
  std::string data_path;       // instance JSON-lines
  std::string metric_name;     // acc, em or rouge-2
  bool excluded_from_7avg = false;
  std::vector<std::string> stop_sequences = {"\n\n"};
  int max_new_tokens = 256;
  bool length_normalize = false;  // divide MC scores by continuation bytes
  Segmenter segmenter = Segmenter::kChar;
};

// Throws ConfigError when the metric does not fit the task type
// (multiple_choice -> acc, generate_em -> em or acc, generate_rouge2 ->
// rouge-2), when a non-summarization task is excluded from the 7-task
// average, or when counts are negative.
void ValidateTask(const TaskSpec& task);

struct Suite {
  std::string name;
  std::vector<TaskSpec> tasks;
};

// Suite file: {"version": 1, "name": ..., "tasks": [task, ...]} where a
// task is {"name", "task_type", "n_shots", "template": {"question",
// "answer", "separator"}, "exemplars": [rows] or "file", "data": "file",
// "metric_name", "excluded_from_7avg", "stop_sequences", "max_new_tokens",
// "length_normalize", "rouge_segmenter": "char" | "whitespace"}.
// Relative file names resolve against `base_dir`. Data files are not
// opened here. Throws ConfigError.
Suite ParseSuite(std::string_view content, const std::string& base_dir = "");
Suite LoadSuite(const std::string& path);

// Instance rows: multiple choice {id?, question, choices, gold_index},
// generation {id?, question, references}. Rows without an id get "#N"
// (1-based line). Throws FormatError naming the line.
std::vector<Instance> ParseInstances(std::string_view content,
                                     TaskType type);
std::vector<Instance> LoadInstances(const std::string& path, TaskType type);

// Inline exemplars, or the exemplar file when one is configured.
std::vector<Instance> ResolveExemplars(const TaskSpec& task);

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_TASK_H_
