/*
 * Copyright 2026 The newsrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <newsrank/text.hpp>

#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace newsrank {
namespace {

TEST(NormalizeTitle, BasicFolding) {
  EXPECT_EQ(normalize_title("Hello, World!"), "hello world");
  EXPECT_EQ(normalize_title(""), "");
  EXPECT_EQ(normalize_title("   "), "");
  EXPECT_EQ(normalize_title("A b!"), "a b");
  EXPECT_EQ(normalize_title("a B"), "a b");
}

TEST(NormalizeTitle, UnicodePunctuationBecomesSpace) {
  // Curly apostrophe (U+2019) and em dash (U+2014) are punctuation.
  EXPECT_EQ(normalize_title("Israel’s interior minister — Friday"),
            "israel s interior minister friday");
  // Symbols (category S*) are removed too.
  EXPECT_EQ(normalize_title("price: $40 + tax"), "price 40 tax");
  EXPECT_EQ(normalize_title("© 2026 Pub™"), "2026 pub");
}

TEST(NormalizeTitle, UnicodeLowercasing) {
  EXPECT_EQ(normalize_title("ÉLÉCTION"), "éléction");
  EXPECT_EQ(normalize_title("STRAßE"), "straße");
}

TEST(NormalizeTitle, WhitespaceRunsCollapse) {
  EXPECT_EQ(normalize_title("  a \t b  c\n"), "a b c");
}

TEST(NormalizeTitle, InvalidUtf8PassesThrough) {
  const std::string invalid = std::string("a ") + char(0xff) + " b";
  const std::string out = normalize_title(invalid);
  EXPECT_NE(out.find(char(0xff)), std::string::npos);
  EXPECT_EQ(normalize_title(out), out);  // still idempotent
}

TEST(NormalizeTitle, Idempotent) {
  const std::string inputs[] = {"Hello, World!", "Israel’s interior minister — Friday",
                                "MiXeD   CaSe—punct!", ""};
  for (const std::string& input : inputs) {
    const std::string once = normalize_title(input);
    EXPECT_EQ(normalize_title(once), once) << input;
  }
}

TEST(Tokenize, SplitsNormalizedTitles) {
  EXPECT_EQ(tokenize("hello world"), (std::vector<std::string>{"hello", "world"}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_EQ(tokenize("one"), (std::vector<std::string>{"one"}));
}

}  // namespace
}  // namespace newsrank
