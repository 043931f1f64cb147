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

#ifndef NEWSRANK_TIMEUTIL_HPP_
#define NEWSRANK_TIMEUTIL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace newsrank {

// Parses an RFC 3339 timestamp ("2020-01-26T15:04:05Z", offsets and
// fractional seconds accepted, fraction truncated) to Unix seconds.
// Throws ValidationError on malformed input.
std::int64_t parse_rfc3339(std::string_view text);

// Formats Unix seconds as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(std::int64_t unix_seconds);

// Compact form used for snapshot directory names: "YYYYMMDDTHHMMSSZ".
std::string format_timestamp_compact(std::int64_t unix_seconds);

}  // namespace newsrank

#endif  // NEWSRANK_TIMEUTIL_HPP_
