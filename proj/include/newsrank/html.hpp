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

#ifndef NEWSRANK_HTML_HPP_
#define NEWSRANK_HTML_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace newsrank {

// Returns the href targets of all <a> tags, resolved against base_url.
// Only http/https results are kept; duplicates are removed preserving
// first-seen order. Tolerates arbitrary bytes; unparseable fragments
// are skipped rather than reported.
std::vector<std::string> extract_links(std::string_view html, const std::string& base_url);

}  // namespace newsrank

#endif  // NEWSRANK_HTML_HPP_
