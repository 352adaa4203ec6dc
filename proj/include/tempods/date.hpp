#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tempods {

/// A calendar day, stored as days since 1970-01-01. The pipeline's time
/// granularity is one day; finer timestamp components are dropped at parse
/// time.
struct CalDay {
  std::int32_t value = 0;

  auto operator<=>(const CalDay&) const = default;

  CalDay operator+(int days) const { return CalDay{value + days}; }
  CalDay operator-(int days) const { return CalDay{value - days}; }
  int operator-(CalDay other) const { return value - other.value; }
  CalDay& operator++() { ++value; return *this; }
};

std::int32_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int32_t z, int& year, int& month, int& day);

CalDay make_day(int year, int month, int day);

/// Parses the date prefix of an ISO-8601 timestamp ("YYYY-MM-DD", optionally
/// followed by a time part). Returns nullopt for malformed or non-existent
/// dates such as 2016-13-40.
std::optional<CalDay> parse_day(std::string_view text);

std::string to_string(CalDay d);

}  // namespace tempods
