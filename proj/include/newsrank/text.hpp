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

#ifndef NEWSRANK_TEXT_HPP_
#define NEWSRANK_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace newsrank {

// Title normalization: Unicode lowercase, every punctuation or symbol
// character (general categories P* and S*) becomes a space, whitespace
// runs collapse to single spaces, result trimmed. Idempotent. Invalid
// UTF-8 bytes pass through untouched.
std::string normalize_title(std::string_view title);

// Whitespace tokens of an already-normalized title.
std::vector<std::string> tokenize(std::string_view normalized_title);

}  // namespace newsrank

#endif  // NEWSRANK_TEXT_HPP_
