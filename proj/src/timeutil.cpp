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

#include <newsrank/timeutil.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

// Civil-calendar conversions from Howard Hinnant's public-domain
// chrono-compatible algorithms; exact over the full int64 range we use.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t* y, unsigned* m, unsigned* d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  *d = doy - (153 * mp + 2) / 5 + 1;
  *m = mp + (mp < 10 ? 3 : -9);
  *y = yr + (*m <= 2);
}

bool is_leap(std::int64_t y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

unsigned days_in_month(std::int64_t y, unsigned m) {
  static constexpr std::array<unsigned, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw ValidationError("invalid RFC 3339 timestamp \"" + std::string(text) + "\": " + why);
}

int digits2(std::string_view s, std::size_t at, std::string_view whole, const char* what) {
  if (at + 2 > s.size() || s[at] < '0' || s[at] > '9' || s[at + 1] < '0' || s[at + 1] > '9') {
    fail(whole, what);
  }
  return (s[at] - '0') * 10 + (s[at + 1] - '0');
}

}  // namespace

std::int64_t parse_rfc3339(std::string_view text) {
  // YYYY-MM-DD{T| }HH:MM:SS[.frac](Z|±HH:MM), case-insensitive T/Z.
  std::string_view s = text;
  if (s.size() < 20) fail(text, "too short");
  for (int i = 0; i < 4; ++i) {
    if (s[i] < '0' || s[i] > '9') fail(text, "bad year");
  }
  const std::int64_t year =
      (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  if (s[4] != '-') fail(text, "expected '-' after year");
  const int month = digits2(s, 5, text, "bad month");
  if (s[7] != '-') fail(text, "expected '-' after month");
  const int day = digits2(s, 8, text, "bad day");
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') fail(text, "expected 'T' separator");
  const int hour = digits2(s, 11, text, "bad hour");
  if (s[13] != ':') fail(text, "expected ':' after hour");
  const int minute = digits2(s, 14, text, "bad minute");
  if (s[16] != ':') fail(text, "expected ':' after minute");
  const int second = digits2(s, 17, text, "bad second");

  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail(text, "empty fractional seconds");
    // Sub-second precision is truncated: the corpus format is
    // second-resolution.
  }

  std::int64_t offset = 0;
  if (pos >= s.size()) fail(text, "missing UTC offset");
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    const bool negative = s[pos] == '-';
    ++pos;
    const int oh = digits2(s, pos, text, "bad offset hour");
    if (pos + 2 >= s.size() || s[pos + 2] != ':') fail(text, "expected ':' in offset");
    const int om = digits2(s, pos + 3, text, "bad offset minute");
    if (oh > 23 || om > 59) fail(text, "offset out of range");
    offset = (negative ? -1 : 1) * (oh * 3600 + om * 60);
    pos += 5;
  } else {
    fail(text, "missing UTC offset");
  }
  if (pos != s.size()) fail(text, "trailing characters");

  if (month < 1 || month > 12) fail(text, "month out of range");
  if (day < 1 || day > static_cast<int>(days_in_month(year, month))) {
    fail(text, "day out of range");
  }
  if (hour > 23 || minute > 59 || second > 59) fail(text, "time out of range");

  const std::int64_t days = days_from_civil(year, month, day);
  return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

namespace {

std::string format_with(std::int64_t unix_seconds, const char* pattern) {
  std::int64_t days = unix_seconds / 86400;
  std::int64_t rem = unix_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  std::int64_t year = 0;
  unsigned month = 0;
  unsigned day = 0;
  civil_from_days(days, &year, &month, &day);
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), pattern, static_cast<long long>(year), month, day,
                static_cast<unsigned>(rem / 3600), static_cast<unsigned>(rem / 60 % 60),
                static_cast<unsigned>(rem % 60));
  return buffer;
}

}  // namespace

std::string format_rfc3339(std::int64_t unix_seconds) {
  return format_with(unix_seconds, "%04lld-%02u-%02uT%02u:%02u:%02uZ");
}

std::string format_timestamp_compact(std::int64_t unix_seconds) {
  return format_with(unix_seconds, "%04lld%02u%02uT%02u%02u%02uZ");
}

}  // namespace newsrank
