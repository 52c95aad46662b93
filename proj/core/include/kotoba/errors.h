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

#ifndef KOTOBA_ERRORS_H_
#define KOTOBA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kotoba {

// Root of every error thrown by the library. Callers that only need to
// distinguish "our failure" from anything else can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (negative budget, empty corpus
// where one is required, too-short text for shingling, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(what + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A structured artifact (vocabulary, config, task, model) is malformed,
// fails validation, or carries an unsupported version.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Configuration rejected at load time. Carries every offending field so the
// CLI can list them all at once.
class ConfigError : public FormatError {
 public:
  using FormatError::FormatError;
};

class UnknownIdError : public Error {
 public:
  explicit UnknownIdError(long long id)
      : Error("unknown token id " + std::to_string(id)), id_(id) {}
  long long id() const { return id_; }

 private:
  long long id_;
};

// Byte tokens reassembled into an ill-formed UTF-8 sequence.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A model scorer failed to produce a result.
class ScorerError : public Error {
 public:
  using Error::Error;
};

// The scorer backend could not be reached at all (connection refused,
// timeouts exhausted after retries).
class BackendUnavailableError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

}  // namespace kotoba

#endif  // KOTOBA_ERRORS_H_
