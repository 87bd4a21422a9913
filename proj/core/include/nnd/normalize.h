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

#ifndef NND_NORMALIZE_H_
#define NND_NORMALIZE_H_

#include <string>
#include <string_view>

namespace nnd {

// Text normalization applied to candidates before pairing. Stored text only
// ever receives NFC and whitespace normalization; quote stripping and
// lowercasing affect the duplicate-detection key alone.
struct NormalizationConfig {
  bool collapse_whitespace = true;
  bool unicode_nfc = true;
  bool lowercase_for_dedup = true;
  bool strip_outer_quotes = false;

  friend bool operator==(const NormalizationConfig&,
                         const NormalizationConfig&) = default;
};

// Text as stored in suite files. Throws nnd::Error on invalid UTF-8.
std::string NormalizeStored(std::string_view text,
                            const NormalizationConfig& config);

// Key used to decide whether two candidates are textual duplicates.
std::string DedupKey(std::string_view text, const NormalizationConfig& config);

}  // namespace nnd

#endif  // NND_NORMALIZE_H_
