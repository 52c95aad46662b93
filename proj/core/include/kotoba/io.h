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

#ifndef KOTOBA_IO_H_
#define KOTOBA_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace kotoba {

// Both throw IoError naming the path.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

// Splits on '\n'; a trailing '\r' is kept. No empty final element for a
// terminating newline.
std::vector<std::string> SplitLines(std::string_view content);

}  // namespace kotoba

#endif  // KOTOBA_IO_H_
