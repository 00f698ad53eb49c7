#pragma once

#include <cstdint>

namespace stm {

/// Serial day number of a civil date (days since 1970-01-01).
constexpr long days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

constexpr bool is_leap_year(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

constexpr int days_in_month(int year, int month) {
  constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return lengths[month - 1];
}

/// Absolute month key: consecutive integers, one per calendar month.
constexpr int ym_key(int year, int month) { return year * 12 + (month - 1); }
constexpr int ym_year(int key) { return key / 12; }
constexpr int ym_month(int key) { return key % 12 + 1; }

enum class Season : std::uint8_t { winter = 0, spring = 1, summer = 2, fall = 3 };

/// Dec-Feb winter, Mar-May spring, Jun-Aug summer, Sep-Nov fall.
constexpr Season season_of_month(int month) {
  if (month == 12 || month <= 2) return Season::winter;
  if (month <= 5) return Season::spring;
  if (month <= 8) return Season::summer;
  return Season::fall;
}

constexpr const char* season_name(Season s) {
  switch (s) {
    case Season::winter: return "winter";
    case Season::spring: return "spring";
    case Season::summer: return "summer";
    default: return "fall";
  }
}

}  // namespace stm
