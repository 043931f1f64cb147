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

#include <newsrank/html.hpp>

#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace newsrank {
namespace {

TEST(ExtractLinks, NoAnchors) {
  EXPECT_TRUE(extract_links("<p>no anchors</p>", "https://pub.example/art").empty());
  EXPECT_TRUE(extract_links("", "https://pub.example/art").empty());
}

TEST(ExtractLinks, SingleAbsoluteLink) {
  EXPECT_EQ(extract_links(R"(<a href="https://x.example/a">t</a>)", "https://pub.example/art"),
            (std::vector<std::string>{"https://x.example/a"}));
}

TEST(ExtractLinks, MixedSchemesAndRelative) {
  const std::string html =
      R"(<a href="https://x.example/a">abs</a>
         <a href="/b">rel</a>
         <a href="mailto:tips@pub.example">mail</a>)";
  EXPECT_EQ(extract_links(html, "https://pub.example/art"),
            (std::vector<std::string>{"https://x.example/a", "https://pub.example/b"}));
}

// Expected output generated with a reference HTML parser plus reference
// URL resolution over this exact document, then frozen.
TEST(ExtractLinks, TolerantParsingFixture) {
  const std::string html = R"fixture(<!DOCTYPE html>
<html>
<head>
  <title>Sample</title>
  <!-- <a href="https://hidden.example/in-comment">not a link</a> -->
  <script>var s = '<a href="https://hidden.example/in-script">x</a>';</script>
  <style>.a { content: '<a href="https://hidden.example/in-style">'; }</style>
</head>
<body>
  <p>no anchors here</p>
  <a href="https://x.example/a">absolute</a>
  <a class="big" href='b?q=1#frag' data-x="1">relative single-quoted</a>
  <A HREF="../up/c">uppercase tag</A>
  <a href=//cdn.example/scheme-rel>protocol relative unquoted</a>
  <a title="x > y" href="d.html">gt inside quoted attribute</a>
  <a href="mailto:news@pub.example">mail</a>
  <a href="javascript:void(0)">js</a>
  <a href="https://x.example/a">duplicate dropped</a>
  <a href="https://amp.example/e?x=1&amp;y=2">entity decode</a>
  <a name="anchor-without-href">no href</a>
  <a href="f&#46;html">numeric entity</a>
</body>
</html>)fixture";
  const std::vector<std::string> expected = {
      "https://x.example/a",
      "https://pub.example/news/day/b?q=1#frag",
      "https://pub.example/news/up/c",
      "https://cdn.example/scheme-rel",
      "https://pub.example/news/day/d.html",
      "https://amp.example/e?x=1&y=2",
      "https://pub.example/news/day/f.html",
  };
  EXPECT_EQ(extract_links(html, "https://pub.example/news/day/item.html"), expected);
}

TEST(ExtractLinks, FirstHrefAttributeWins) {
  EXPECT_EQ(extract_links(R"(<a href="/first" href="/second">t</a>)", "https://pub.example/x"),
            (std::vector<std::string>{"https://pub.example/first"}));
}

TEST(ExtractLinks, SurvivesTruncatedMarkup) {
  // Unterminated tags and attribute values must not crash or loop.
  EXPECT_TRUE(extract_links("<a href=", "https://pub.example/x").empty());
  EXPECT_TRUE(extract_links("<a href=\"unterminated", "https://pub.example/x").empty());
  EXPECT_TRUE(extract_links("<script>never closed", "https://pub.example/x").empty());
  EXPECT_TRUE(extract_links("<!-- never closed", "https://pub.example/x").empty());
  EXPECT_EQ(extract_links("<a href='/ok'>t</a><a href='/trunc", "https://pub.example/x"),
            (std::vector<std::string>{"https://pub.example/ok"}));
}

TEST(ExtractLinks, NeverEmitsRelativeOrDuplicate) {
  const std::string html =
      R"(<a href="a">1</a><a href="./a">2</a><a href="b">3</a><a href="a">4</a>)";
  const std::vector<std::string> links = extract_links(html, "https://pub.example/dir/page");
  EXPECT_EQ(links, (std::vector<std::string>{"https://pub.example/dir/a",
                                             "https://pub.example/dir/b"}));
}

}  // namespace
}  // namespace newsrank
