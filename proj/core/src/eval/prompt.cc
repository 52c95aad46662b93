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

#include "kotoba/eval/prompt.h"

#include <vector>

#include "kotoba/errors.h"

namespace kotoba::eval {
namespace {

struct Slot {
  size_t begin;
  size_t end;  // one past '}'
  std::string_view name;
};

bool IsSlotChar(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }

// {identifier} occurrences; any other brace is literal text.
std::vector<Slot> FindSlots(std::string_view tmpl) {
  std::vector<Slot> slots;
  size_t pos = 0;
  while ((pos = tmpl.find('{', pos)) != std::string_view::npos) {
    size_t end = pos + 1;
    while (end < tmpl.size() && IsSlotChar(tmpl[end])) ++end;
    if (end < tmpl.size() && tmpl[end] == '}' && end > pos + 1) {
      slots.push_back({pos, end + 1, tmpl.substr(pos + 1, end - pos - 1)});
      pos = end + 1;
    } else {
      ++pos;
    }
  }
  return slots;
}

std::string RenderChoices(const Instance& instance) {
  std::string out;
  for (size_t i = 0; i < instance.choices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(i) + "." + instance.choices[i];
  }
  return out;
}

void CheckSlots(std::string_view tmpl, std::string_view required,
                const char* which) {
  bool found = false;
  for (const Slot& slot : FindSlots(tmpl)) {
    if (slot.name != "question" && slot.name != "choices" &&
        slot.name != "answer") {
      throw ConfigError(std::string(which) + " template has unknown slot {" +
                        std::string(slot.name) + "}");
    }
    found |= slot.name == required;
  }
  if (!found) {
    throw ConfigError(std::string(which) + " template is missing {" +
                      std::string(required) + "}");
  }
}

// Position of the {answer} slot in a validated answer template.
size_t AnswerSlot(std::string_view tmpl) {
  for (const Slot& slot : FindSlots(tmpl)) {
    if (slot.name == "answer") return slot.begin;
  }
  return tmpl.size();
}

}  // namespace

void ValidateTemplate(const PromptTemplate& tmpl) {
  CheckSlots(tmpl.question, "question", "question");
  CheckSlots(tmpl.answer, "answer", "answer");
}

std::string FillTemplate(std::string_view tmpl, const Instance& instance,
                         std::string_view answer) {
  std::string out;
  size_t pos = 0;
  for (const Slot& slot : FindSlots(tmpl)) {
    out.append(tmpl.substr(pos, slot.begin - pos));
    if (slot.name == "question") {
      out += instance.question;
    } else if (slot.name == "choices") {
      out += RenderChoices(instance);
    } else if (slot.name == "answer") {
      out += answer;
    } else {
      out.append(tmpl.substr(slot.begin, slot.end - slot.begin));
    }
    pos = slot.end;
  }
  out.append(tmpl.substr(pos));
  return out;
}

std::string BuildPrompt(const TaskSpec& task, const Instance& instance,
                        std::span<const Instance> exemplars, int n) {
  ValidateTemplate(task.prompt);
  if (n < 0 || static_cast<size_t>(n) > exemplars.size()) {
    throw InvalidArgumentError(
        "task '" + task.name + "' needs " + std::to_string(n) +
        " exemplars but has " + std::to_string(exemplars.size()));
  }
  std::string prompt;
  for (int i = 0; i < n; ++i) {
    const Instance& e = exemplars[i];
    if (e.question == instance.question) {
      throw InvalidArgumentError("exemplar " + e.id +
                                 " repeats the evaluated question of " +
                                 instance.id);
    }
    prompt += FillTemplate(task.prompt.question, e, "");
    prompt += FillTemplate(task.prompt.answer, e, e.answer());
    prompt += task.prompt.separator;
  }
  prompt += FillTemplate(task.prompt.question, instance, "");
  const std::string_view answer_tmpl = task.prompt.answer;
  prompt += FillTemplate(answer_tmpl.substr(0, AnswerSlot(answer_tmpl)),
                         instance, "");
  return prompt;
}

std::string RenderContinuation(const TaskSpec& task, const Instance& instance,
                               std::string_view answer) {
  const std::string_view answer_tmpl = task.prompt.answer;
  return FillTemplate(answer_tmpl.substr(AnswerSlot(answer_tmpl)), instance,
                      answer);
}

}  // namespace kotoba::eval
