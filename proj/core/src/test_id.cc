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

#include "nnd/test_id.h"

#include <openssl/evp.h>

#include <array>

#include "nnd/error.h"

namespace nnd {

std::string Sha256Hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw InputError("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::string MakeTestId(std::string_view context_id,
                       std::string_view high_candidate_id,
                       std::string_view low_candidate_id,
                       const std::optional<std::string>& attribute) {
  std::string buffer;
  buffer.append(context_id);
  buffer.push_back('\0');
  buffer.append(high_candidate_id);
  buffer.push_back('\0');
  buffer.append(low_candidate_id);
  buffer.push_back('\0');
  if (attribute) buffer.append(*attribute);
  return Sha256Hex(buffer).substr(0, 16);
}

}  // namespace nnd
