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

#include <newsrank/corpus.hpp>

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <newsrank/error.hpp>
#include <newsrank/timeutil.hpp>

namespace newsrank {
namespace {

constexpr std::int64_t kSnapshot = 1767225600;  // 2026-01-01T00:00:00Z

std::string record(const std::string& id, const std::string& published_at,
                   const std::string& extra = "") {
  return R"({"id":")" + id + R"(","url":"https://pub)" + id +
         R"(.example/)" + id + R"(","title":"title )" + id +
         R"(","publisher":"pub)" + id + R"(","published_at":")" + published_at + "\"" + extra +
         "}";
}

TEST(LoadCorpus, EmptyInput) {
  const LoadResult result = load_corpus_records({}, kSnapshot, 7);
  EXPECT_TRUE(result.corpus.articles.empty());
  EXPECT_TRUE(result.rejects.empty());
  EXPECT_EQ(result.corpus.snapshot_time, kSnapshot);
  EXPECT_EQ(result.corpus.window_days, 7);
}

TEST(LoadCorpus, WindowIsHalfOpen) {
  const std::vector<std::string> lines = {
      record("a", "2025-12-25T00:00:00Z"),  // exactly snapshot - 7d: excluded
      record("b", "2025-12-25T00:00:01Z"),  // one second inside
      record("c", "2026-01-01T00:00:00Z"),  // exactly snapshot: included
      record("d", "2026-01-01T00:00:01Z"),  // future: excluded
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 2u);
  EXPECT_EQ(result.corpus.articles[0].id, "b");
  EXPECT_EQ(result.corpus.articles[1].id, "c");
  EXPECT_TRUE(result.rejects.empty());  // out-of-window is not an error
}

TEST(LoadCorpus, StaleRecordDropped) {
  const std::vector<std::string> lines = {
      record("a", "2025-12-30T10:00:00Z"),
      record("b", "2025-12-20T10:00:00Z"),  // stale
      record("c", "2025-12-31T10:00:00Z"),
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 2u);
  EXPECT_EQ(result.corpus.articles[0].id, "a");
  EXPECT_EQ(result.corpus.articles[1].id, "c");
}

TEST(LoadCorpus, MalformedRecordsAreCollectedNotFatal) {
  const std::vector<std::string> lines = {
      "not json at all",
      record("ok", "2025-12-30T00:00:00Z"),
      R"({"id":"x","url":"https://p.example/x","publisher":"p","published_at":"2025-12-30T00:00:00Z"})",  // no title
      record("bad-time", "yesterday"),
      record("ok", "2025-12-31T00:00:00Z"),  // duplicate id
      R"({"id":"","url":"https://p.example/e","title":"t","publisher":"p","published_at":"2025-12-30T00:00:00Z"})",
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 1u);
  EXPECT_EQ(result.corpus.articles[0].id, "ok");
  ASSERT_EQ(result.rejects.size(), 5u);
  EXPECT_EQ(result.rejects[0].line, 1u);
  EXPECT_NE(result.rejects[0].reason.find("invalid JSON"), std::string::npos);
  EXPECT_EQ(result.rejects[1].line, 3u);
  EXPECT_NE(result.rejects[1].reason.find("title"), std::string::npos);
  EXPECT_EQ(result.rejects[2].line, 4u);
  EXPECT_EQ(result.rejects[3].line, 5u);
  EXPECT_NE(result.rejects[3].reason.find("duplicate id"), std::string::npos);
  EXPECT_EQ(result.rejects[4].line, 6u);
}

TEST(LoadCorpus, CanonicalizesUrlsAndStripsTracking) {
  const std::vector<std::string> lines = {
      R"({"id":"a","url":"HTTPS://Pub.Example/Art?utm_source=fb&x=1#sec","title":"t","publisher":"pub","published_at":"2025-12-30T00:00:00Z"})",
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 1u);
  // Raw URL is preserved; the canonical form is normalized.
  EXPECT_EQ(result.corpus.articles[0].url, "HTTPS://Pub.Example/Art?utm_source=fb&x=1#sec");
  EXPECT_EQ(result.corpus.articles[0].canonical_url, "https://pub.example/Art?x=1");
}

TEST(LoadCorpus, ExplicitCanonicalUrlAndMapWin) {
  CanonicalMap map;
  map.entries["https://short.example/1"] = "https://pub.example/full";
  LoadOptions options;
  options.canonical_map = map;
  const std::vector<std::string> lines = {
      R"({"id":"a","url":"https://short.example/1","title":"t","publisher":"pub","published_at":"2025-12-30T00:00:00Z"})",
      R"({"id":"b","url":"https://x.example/b","canonical_url":"https://pub.example/b-canon","title":"t","publisher":"pub2","published_at":"2025-12-30T00:00:00Z"})",
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7, options);
  ASSERT_EQ(result.corpus.articles.size(), 2u);
  EXPECT_EQ(result.corpus.articles[0].canonical_url, "https://pub.example/full");
  EXPECT_EQ(result.corpus.articles[1].canonical_url, "https://pub.example/b-canon");
}

TEST(LoadCorpus, HtmlPopulatesLinksWhenAbsent) {
  const std::vector<std::string> lines = {
      record("a", "2025-12-30T00:00:00Z",
             R"(,"html":"<a href=\"/other\">x</a><a href=\"https://x.example/y?fbclid=1\">y</a>")"),
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 1u);
  EXPECT_EQ(result.corpus.articles[0].links,
            (std::vector<std::string>{"https://puba.example/other", "https://x.example/y"}));
}

TEST(LoadCorpus, ExplicitLinksBeatHtml) {
  const std::vector<std::string> lines = {
      record("a", "2025-12-30T00:00:00Z",
             R"(,"links":["https://x.example/explicit"],"html":"<a href=\"/ignored\">x</a>")"),
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 1u);
  EXPECT_EQ(result.corpus.articles[0].links,
            (std::vector<std::string>{"https://x.example/explicit"}));
}

TEST(LoadCorpus, LinkListCanonicalizedAndDeduped) {
  const std::vector<std::string> lines = {
      record("a", "2025-12-30T00:00:00Z",
             R"(,"links":["HTTPS://X.Example/y#f","https://x.example/y","not a url","https://z.example/q?utm_medium=m"])"),
  };
  const LoadResult result = load_corpus_records(lines, kSnapshot, 7);
  ASSERT_EQ(result.corpus.articles.size(), 1u);
  EXPECT_EQ(result.corpus.articles[0].links,
            (std::vector<std::string>{"https://x.example/y", "https://z.example/q"}));
}

TEST(LoadCorpus, UnreadableFileIsFatal) {
  EXPECT_THROW(load_corpus("/nonexistent/articles.jsonl", kSnapshot, 7), IoError);
}

TEST(LoadCorpus, InvalidWindowRejected) {
  EXPECT_THROW(load_corpus_records({}, kSnapshot, 0), ValidationError);
  EXPECT_THROW(load_corpus_records({}, kSnapshot, -1), ValidationError);
}

}  // namespace
}  // namespace newsrank
