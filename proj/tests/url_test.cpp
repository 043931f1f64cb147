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

#include <newsrank/url.hpp>

#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

TEST(ParseUrl, SplitsComponents) {
  const auto parts = parse_url("https://user:pw@Host.Example:8080/a/b?x=1&y=2#frag");
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->scheme, "https");
  EXPECT_EQ(parts->userinfo, "user:pw");
  EXPECT_EQ(parts->host, "host.example");
  EXPECT_EQ(parts->port, "8080");
  EXPECT_EQ(parts->path, "/a/b");
  EXPECT_EQ(parts->query, "x=1&y=2");
  EXPECT_EQ(parts->fragment, "frag");
  EXPECT_TRUE(parts->has_query);
  EXPECT_TRUE(parts->has_fragment);
}

TEST(ParseUrl, MinimalForms) {
  const auto bare = parse_url("http://example.com");
  ASSERT_TRUE(bare.has_value());
  EXPECT_EQ(bare->host, "example.com");
  EXPECT_EQ(bare->path, "");
  EXPECT_FALSE(bare->has_query);
  EXPECT_FALSE(bare->has_fragment);
  EXPECT_EQ(bare->serialize(), "http://example.com");
}

TEST(ParseUrl, RejectsNonUrls) {
  EXPECT_FALSE(parse_url("").has_value());
  EXPECT_FALSE(parse_url("no-scheme/path").has_value());
  EXPECT_FALSE(parse_url("mailto:a@b").has_value());  // no authority
  EXPECT_FALSE(parse_url("https://").has_value());    // empty host
  EXPECT_FALSE(parse_url("://x").has_value());
}

// Expected strings generated with a reference resolver implementing
// RFC 3986 section 5 (strict mode) and frozen here.
TEST(ResolveUrl, ReferenceResolutionFixture) {
  const std::string base = "https://pub.example/news/day/item.html";
  const std::pair<std::string, std::string> cases[] = {
      {"b?q=1#frag", "https://pub.example/news/day/b?q=1#frag"},
      {"../up/c", "https://pub.example/news/up/c"},
      {"//cdn.example/scheme-rel", "https://cdn.example/scheme-rel"},
      {"d.html", "https://pub.example/news/day/d.html"},
      {"https://x.example/a", "https://x.example/a"},
      {"?x=1", "https://pub.example/news/day/item.html?x=1"},
      {"#f", "https://pub.example/news/day/item.html#f"},
      {"", "https://pub.example/news/day/item.html"},
      {"/root", "https://pub.example/root"},
      {"../../../x", "https://pub.example/x"},
      {"./", "https://pub.example/news/day/"},
      {"..", "https://pub.example/news/"},
      {"g.", "https://pub.example/news/day/g."},
      {".g", "https://pub.example/news/day/.g"},
      {"g..", "https://pub.example/news/day/g.."},
      {"..g", "https://pub.example/news/day/..g"},
      {"g;x=1/./y", "https://pub.example/news/day/g;x=1/y"},
      {"g#s/./x", "https://pub.example/news/day/g#s/./x"},
  };
  for (const auto& [ref, expected] : cases) {
    const auto resolved = resolve_url(base, ref);
    ASSERT_TRUE(resolved.has_value()) << ref;
    EXPECT_EQ(*resolved, expected) << ref;
  }
}

TEST(ResolveUrl, HostOnlyBase) {
  const std::string base = "https://host.example";
  EXPECT_EQ(resolve_url(base, "a").value(), "https://host.example/a");
  EXPECT_EQ(resolve_url(base, "/a").value(), "https://host.example/a");
  EXPECT_EQ(resolve_url(base, "?q").value(), "https://host.example?q");
  EXPECT_EQ(resolve_url(base, "#f").value(), "https://host.example#f");
}

TEST(ResolveUrl, AbsoluteReferenceIgnoresBase) {
  EXPECT_EQ(resolve_url("https://a.example/x", "http://b.example/y").value(),
            "http://b.example/y");
}

TEST(ResolveUrl, UnresolvableReturnsEmpty) {
  EXPECT_FALSE(resolve_url("not-a-base", "also/relative").has_value());
}

TEST(CanonicalizeUrl, MapLookupWinsVerbatim) {
  CanonicalMap map;
  map.entries["https://short.example/x"] = "https://pub.example/full-story";
  EXPECT_EQ(canonicalize_url("https://short.example/x", map),
            "https://pub.example/full-story");
}

TEST(CanonicalizeUrl, LowercasesAndStripsFragment) {
  const CanonicalMap empty;
  EXPECT_EQ(canonicalize_url("HTTPS://Pub.Example/a#frag", empty), "https://pub.example/a");
}

TEST(CanonicalizeUrl, StripsConfiguredTrackingParams) {
  const CanonicalMap empty;
  EXPECT_EQ(canonicalize_url("https://pub.example/a?utm_source=x&id=2", empty),
            "https://pub.example/a?id=2");
  EXPECT_EQ(canonicalize_url(
                "HTTPS://Example.COM/path?utm_source=fb&x=1&utm_medium=a&fbclid=z#frag", empty),
            "https://example.com/path?x=1");
  // Query emptied by stripping loses its '?'.
  EXPECT_EQ(canonicalize_url("https://pub.example/a?utm_campaign=c", empty),
            "https://pub.example/a");
}

TEST(CanonicalizeUrl, TrailingSlashOnEmptyPathOnly) {
  const CanonicalMap empty;
  EXPECT_EQ(canonicalize_url("http://example.com/", empty), "http://example.com");
  EXPECT_EQ(canonicalize_url("http://example.com/a/", empty), "http://example.com/a/");
}

TEST(CanonicalizeUrl, IdempotentOnItsOwnOutput) {
  const CanonicalMap empty;
  const std::string inputs[] = {
      "HTTPS://Pub.Example/a#frag",
      "https://pub.example/a?utm_source=x&id=2&fbclid=y",
      "http://example.com/",
      "https://user@host.example:8443/p?q=1",
  };
  for (const std::string& input : inputs) {
    const std::string once = canonicalize_url(input, empty);
    EXPECT_EQ(canonicalize_url(once, empty), once) << input;
  }
}

TEST(CanonicalizeUrl, InvalidUrlNamesOffender) {
  const CanonicalMap empty;
  try {
    canonicalize_url("not a url", empty);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not a url"), std::string::npos);
  }
}

TEST(CanonicalMapTsv, LoadsAndValidates) {
  const std::string path = ::testing::TempDir() + "/canonical_map.tsv";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "https://short.example/1\thttps://pub.example/one\n";
    out << "\n";
    out << "https://short.example/2\thttps://pub.example/two\n";
  }
  const CanonicalMap map = CanonicalMap::load_tsv(path);
  EXPECT_EQ(map.entries.size(), 2u);
  EXPECT_EQ(map.entries.at("https://short.example/2"), "https://pub.example/two");

  const std::string bad = ::testing::TempDir() + "/canonical_map_bad.tsv";
  {
    std::ofstream out(bad);
    out << "only-one-field\n";
  }
  EXPECT_THROW(CanonicalMap::load_tsv(bad), ValidationError);
  EXPECT_THROW(CanonicalMap::load_tsv("/nonexistent/map.tsv"), IoError);
}

}  // namespace
}  // namespace newsrank
