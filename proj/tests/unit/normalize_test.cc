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

#include "nnd/normalize.h"

#include <gtest/gtest.h>

#include "nnd/error.h"

namespace nnd {
namespace {

TEST(NormalizeTest, CollapsesWhitespace) {
  EXPECT_EQ(NormalizeStored("  a \t b\n\nc  ", {}), "a b c");
  NormalizationConfig keep;
  keep.collapse_whitespace = false;
  EXPECT_EQ(NormalizeStored("  a  b ", keep), "  a  b ");
}

TEST(NormalizeTest, AppliesNfc) {
  // "e" + combining acute -> precomposed U+00E9.
  EXPECT_EQ(NormalizeStored("caf\x65\xcc\x81", {}), "caf\xc3\xa9");
  NormalizationConfig no_nfc;
  no_nfc.unicode_nfc = false;
  EXPECT_EQ(NormalizeStored("caf\x65\xcc\x81", no_nfc), "caf\x65\xcc\x81");
}

TEST(NormalizeTest, StoredTextKeepsCaseAndQuotes) {
  NormalizationConfig config;
  config.strip_outer_quotes = true;
  EXPECT_EQ(NormalizeStored("\"Hello World\"", config), "\"Hello World\"");
}

TEST(NormalizeTest, DedupKeyLowercasesAndOptionallyStripsQuotes) {
  EXPECT_EQ(DedupKey(" Hello   WORLD ", {}), "hello world");
  EXPECT_EQ(DedupKey("\xc3\x89T\xc3\x89", {}), "\xc3\xa9t\xc3\xa9");
  NormalizationConfig quotes;
  quotes.strip_outer_quotes = true;
  EXPECT_EQ(DedupKey("\"Hello\"", quotes), "hello");
  EXPECT_EQ(DedupKey("\xe2\x80\x9c Hi \xe2\x80\x9d", quotes), "hi");
  EXPECT_EQ(DedupKey("\"Hello\"", {}), "\"hello\"");
  NormalizationConfig keep_case;
  keep_case.lowercase_for_dedup = false;
  EXPECT_EQ(DedupKey("Hello", keep_case), "Hello");
}

TEST(NormalizeTest, RejectsInvalidUtf8) {
  EXPECT_THROW(NormalizeStored("bad \xff byte", {}), Error);
}

}  // namespace
}  // namespace nnd
