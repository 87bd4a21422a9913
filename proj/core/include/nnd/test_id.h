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

#ifndef NND_TEST_ID_H_
#define NND_TEST_ID_H_

#include <optional>
#include <string>
#include <string_view>

namespace nnd {

// First 16 hex digits of SHA-256 over the NUL-separated fields.
std::string MakeTestId(std::string_view context_id,
                       std::string_view high_candidate_id,
                       std::string_view low_candidate_id,
                       const std::optional<std::string>& attribute);

std::string Sha256Hex(std::string_view data);

}  // namespace nnd

#endif  // NND_TEST_ID_H_
