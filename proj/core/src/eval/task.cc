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

#include "kotoba/eval/task.h"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <set>

#include "kotoba/errors.h"
#include "kotoba/io.h"

namespace kotoba::eval {
namespace {

using Json = nlohmann::ordered_json;

std::string Resolve(const std::string& base_dir, const std::string& file) {
  if (file.empty() || base_dir.empty()) return file;
  const std::filesystem::path p(file);
  if (p.is_absolute()) return file;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

Instance ParseInstance(const Json& j, TaskType type, size_t line) {
  const std::string where = "line " + std::to_string(line) + ": ";
  if (!j.is_object()) throw FormatError(where + "expected a JSON object");
  Instance inst;
  inst.id = "#" + std::to_string(line);
  try {
    if (const auto id = j.find("id"); id != j.end()) {
      inst.id = id->is_string() ? id->get<std::string>() : id->dump();
    }
    inst.question = j.at("question").get<std::string>();
    if (type == TaskType::kMultipleChoice) {
      inst.choices = j.at("choices").get<std::vector<std::string>>();
      inst.gold_index = j.at("gold_index").get<int>();
      if (inst.choices.size() < 2) {
        throw FormatError(where + "needs at least two choices");
      }
      if (inst.gold_index < 0 ||
          inst.gold_index >= static_cast<int>(inst.choices.size())) {
        throw FormatError(where + "gold_index is out of range");
      }
      inst.references = {inst.choices[inst.gold_index]};
    } else {
      inst.references = j.at("references").get<std::vector<std::string>>();
      if (inst.references.empty()) {
        throw FormatError(where + "references must not be empty");
      }
    }
  } catch (const Json::exception& e) {
    throw FormatError(where + e.what());
  }
  return inst;
}

std::vector<Instance> ParseInstanceArray(const Json& rows, TaskType type) {
  std::vector<Instance> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    out.push_back(ParseInstance(rows[i], type, i + 1));
  }
  return out;
}

TaskSpec ParseTask(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ConfigError("each task must be an object");
  TaskSpec task;
  const std::string name =
      j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                  : "?";
  auto fail = [&name](const std::string& what) -> ConfigError {
    return ConfigError("task '" + name + "': " + what);
  };
  static const std::set<std::string> kKnown = {
      "name",           "task_type",          "n_shots",
      "template",       "exemplars",          "data",
      "metric_name",    "excluded_from_7avg", "stop_sequences",
      "max_new_tokens", "length_normalize",   "rouge_segmenter"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) throw fail("unknown field '" + key + "'");
  }
  try {
    task.name = j.at("name").get<std::string>();
    const auto type = ParseTaskType(j.at("task_type").get<std::string>());
    if (!type) throw fail("unknown task_type");
    task.task_type = *type;
    task.n_shots = j.at("n_shots").get<int>();
    task.metric_name = j.at("metric_name").get<std::string>();
    task.excluded_from_7avg = j.value("excluded_from_7avg", false);
    if (const auto t = j.find("template"); t != j.end()) {
      task.prompt.question = t->value("question", task.prompt.question);
      task.prompt.answer = t->value("answer", task.prompt.answer);
      task.prompt.separator = t->value("separator", task.prompt.separator);
    }
    if (const auto e = j.find("exemplars"); e != j.end()) {
      if (e->is_string()) {
        task.exemplars_path = Resolve(base_dir, e->get<std::string>());
      } else if (e->is_array()) {
        task.exemplars = ParseInstanceArray(*e, task.task_type);
      } else {
        throw fail("exemplars must be a file name or an array");
      }
    }
    if (const auto d = j.find("data"); d != j.end()) {
      task.data_path = Resolve(base_dir, d->get<std::string>());
    }
    if (const auto s = j.find("stop_sequences"); s != j.end()) {
      task.stop_sequences = s->get<std::vector<std::string>>();
    }
    task.max_new_tokens = j.value("max_new_tokens", task.max_new_tokens);
    task.length_normalize = j.value("length_normalize", false);
    const std::string segmenter = j.value("rouge_segmenter", "char");
    if (segmenter == "char") {
      task.segmenter = Segmenter::kChar;
    } else if (segmenter == "whitespace") {
      task.segmenter = Segmenter::kWhitespace;
    } else {
      throw fail("rouge_segmenter must be char or whitespace");
    }
  } catch (const Json::exception& e) {
    throw fail(e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const FormatError& e) {
    throw fail(e.what());
  }
  ValidateTask(task);
  return task;
}

}  // namespace

std::string_view TaskTypeName(TaskType type) {
  switch (type) {
    case TaskType::kMultipleChoice:
      return "multiple_choice";
    case TaskType::kGenerateEm:
      return "generate_em";
    case TaskType::kGenerateRouge2:
      return "generate_rouge2";
  }
  return "multiple_choice";
}

std::optional<TaskType> ParseTaskType(std::string_view name) {
  for (TaskType t : {TaskType::kMultipleChoice, TaskType::kGenerateEm,
                     TaskType::kGenerateRouge2}) {
    if (TaskTypeName(t) == name) return t;
  }
  return std::nullopt;
}

const std::string& Instance::answer() const {
  if (gold_index >= 0 && gold_index < static_cast<int>(choices.size())) {
    return choices[gold_index];
  }
  return references.front();
}

void ValidateTask(const TaskSpec& task) {
  auto fail = [&task](const std::string& what) {
    throw ConfigError("task '" + task.name + "': " + what);
  };
  if (task.name.empty()) fail("name must not be empty");
  if (task.n_shots < 0) fail("n_shots must be >= 0");
  if (task.max_new_tokens < 1) fail("max_new_tokens must be >= 1");
  bool metric_ok = false;
  switch (task.task_type) {
    case TaskType::kMultipleChoice:
      metric_ok = task.metric_name == "acc";
      break;
    case TaskType::kGenerateEm:
      // Math word problems report accuracy of the exact final answer.
      metric_ok = task.metric_name == "em" || task.metric_name == "acc";
      break;
    case TaskType::kGenerateRouge2:
      metric_ok = task.metric_name == "rouge-2";
      break;
  }
  if (!metric_ok) {
    fail("metric '" + task.metric_name + "' does not fit task type " +
         std::string(TaskTypeName(task.task_type)));
  }
  if (task.excluded_from_7avg &&
      task.task_type != TaskType::kGenerateRouge2) {
    fail("only summarization tasks may be excluded from the 7-task average");
  }
}

Suite ParseSuite(std::string_view content, const std::string& base_dir) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("suite must be an object");
  const auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer() ||
      version->get<int>() != kSuiteVersion) {
    throw ConfigError("suite has an unsupported version");
  }
  Suite suite;
  suite.name = j.value("name", "");
  const auto tasks = j.find("tasks");
  if (tasks == j.end() || !tasks->is_array() || tasks->empty()) {
    throw ConfigError("suite needs a non-empty 'tasks' array");
  }
  std::set<std::string> names;
  for (const Json& t : *tasks) {
    TaskSpec task = ParseTask(t, base_dir);
    if (!names.insert(task.name).second) {
      throw ConfigError("task '" + task.name + "' is defined twice");
    }
    suite.tasks.push_back(std::move(task));
  }
  return suite;
}

Suite LoadSuite(const std::string& path) {
  const std::string content = ReadFile(path);
  return ParseSuite(content,
                    std::filesystem::path(path).parent_path().string());
}

std::vector<Instance> ParseInstances(std::string_view content,
                                     TaskType type) {
  std::vector<Instance> out;
  const std::vector<std::string> lines = SplitLines(content);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(lines[i]);
    } catch (const Json::parse_error&) {
      throw FormatError("line " + std::to_string(i + 1) +
                        ": not valid JSON");
    }
    out.push_back(ParseInstance(j, type, i + 1));
  }
  return out;
}

std::vector<Instance> LoadInstances(const std::string& path, TaskType type) {
  try {
    return ParseInstances(ReadFile(path), type);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::vector<Instance> ResolveExemplars(const TaskSpec& task) {
  if (task.exemplars_path.empty()) return task.exemplars;
  return LoadInstances(task.exemplars_path, task.task_type);
}

}  // namespace kotoba::eval
