// Copyright 2026 The NND Evaluation Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NND_ERROR_H_
#define NND_ERROR_H_

#include <stdexcept>
#include <string>

namespace nnd {

// Input errors cover unreadable or malformed inputs (bad JSON, unknown
// labels, schema drift). Validation errors cover inputs that parse but break a
// contract between files (conflicting scores, mismatched model sets).
enum class ErrorKind { kInput, kValidation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error InputError(const std::string& message) {
  return Error(ErrorKind::kInput, message);
}

inline Error ValidationError(const std::string& message) {
  return Error(ErrorKind::kValidation, message);
}

}  // namespace nnd

#endif  // NND_ERROR_H_
