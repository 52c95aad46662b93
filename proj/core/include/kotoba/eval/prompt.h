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

// n-shot prompt construction.

#ifndef KOTOBA_EVAL_PROMPT_H_
#define KOTOBA_EVAL_PROMPT_H_

#include <span>
#include <string>
#include <string_view>

#include "kotoba/eval/task.h"

namespace kotoba::eval {

// Throws ConfigError if the question template lacks {question}, the answer
// template lacks {answer}, or either uses a slot other than {question},
// {choices} and {answer}.
void ValidateTemplate(const PromptTemplate& tmpl);

// Fills the slots of `tmpl`. {answer} takes `answer`.
std::string FillTemplate(std::string_view tmpl, const Instance& instance,
                         std::string_view answer);

// The first `n` exemplars as complete blocks, then the instance's question
// block with the answer slot left open: the answer template is cut at
// {answer}. Blocks are joined by the separator. Throws
// InvalidArgumentError when fewer than `n` exemplars exist or one of them
// has the instance's question.
std::string BuildPrompt(const TaskSpec& task, const Instance& instance,
                        std::span<const Instance> exemplars, int n);

// What follows the prompt for a candidate answer: the answer template from
// {answer} onwards, filled.
std::string RenderContinuation(const TaskSpec& task, const Instance& instance,
                               std::string_view answer);

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_PROMPT_H_
