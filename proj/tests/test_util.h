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

#ifndef KOTOBA_TESTS_TEST_UTIL_H_
#define KOTOBA_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kotoba::testing {

// Absolute path of a file under tests/fixtures.
std::string FixturePath(const std::string& name);

std::vector<nlohmann::json> ReadJsonLines(const std::string& path);
nlohmann::json ReadJson(const std::string& path);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string path(const std::string& name) const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
};

// Random valid UTF-8 mixing ASCII, whitespace, kana, CJK, emoji, astral
// ideographs, combining marks and arbitrary non-surrogate scalars.
std::string RandomUnicode(std::mt19937_64& rng, size_t max_scalars);

// Text of random Japanese-looking sentences drawn from a fixed pool.
std::string RandomJapanese(std::mt19937_64& rng, size_t min_scalars);

}  // namespace kotoba::testing

#endif  // KOTOBA_TESTS_TEST_UTIL_H_
