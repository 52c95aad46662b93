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

#include "kotoba/eval/http_scorer.h"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>

#include "kotoba/errors.h"

namespace kotoba::eval {
namespace {

using Json = nlohmann::json;

}  // namespace

HttpScorer::HttpScorer(std::string base_url, HttpScorerOptions options)
    : options_(options) {
  constexpr std::string_view kScheme = "http://";
  if (base_url.rfind(kScheme, 0) != 0) {
    throw ConfigError("scorer URL must start with http://: " + base_url);
  }
  const size_t slash = base_url.find('/', kScheme.size());
  origin_ = base_url.substr(0, slash);
  if (origin_.size() == kScheme.size()) {
    throw ConfigError("scorer URL has no host: " + base_url);
  }
  if (slash != std::string::npos) prefix_ = base_url.substr(slash);
  while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
  if (options_.retries < 0 || !(options_.timeout_seconds > 0)) {
    throw ConfigError("scorer timeout must be > 0 and retries >= 0");
  }
}

std::string HttpScorer::Post(const std::string& endpoint,
                             const std::string& body) {
  httplib::Client client(origin_);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(options_.timeout_seconds));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const std::string path = prefix_ + endpoint;
  std::string last_error;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    const httplib::Result res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw ScorerError(origin_ + path + " returned HTTP " +
                        std::to_string(res->status));
    }
    return res->body;
  }
  throw BackendUnavailableError(origin_ + path + " unavailable after " +
                                std::to_string(options_.retries + 1) +
                                " attempts: " + last_error);
}

double HttpScorer::LogLikelihood(std::string_view context,
                                 std::string_view continuation) {
  const Json request = {{"context", context}, {"continuation", continuation}};
  const std::string body = Post("/loglikelihood", request.dump());
  try {
    const double value = Json::parse(body).at("loglikelihood").get<double>();
    if (!std::isfinite(value)) {
      throw ScorerError("loglikelihood is not finite");
    }
    return value;
  } catch (const Json::exception& e) {
    throw ScorerError(std::string("bad loglikelihood response: ") + e.what());
  }
}

std::string HttpScorer::Generate(std::string_view context,
                                 std::span<const std::string> stop_sequences,
                                 int max_new_tokens) {
  const Json request = {
      {"context", context},
      {"stop_sequences",
       std::vector<std::string>(stop_sequences.begin(), stop_sequences.end())},
      {"max_new_tokens", max_new_tokens}};
  const std::string body = Post("/generate", request.dump());
  try {
    return Json::parse(body).at("text").get<std::string>();
  } catch (const Json::exception& e) {
    throw ScorerError(std::string("bad generate response: ") + e.what());
  }
}

}  // namespace kotoba::eval
