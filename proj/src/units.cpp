#include "qtree/units.hpp"

#include <cstdio>

namespace qtree {

namespace {
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

std::int64_t Length::floor_units() const { return floor_div(q_, 4); }

std::int64_t Length::ceil_units() const { return -floor_div(-q_, 4); }

Length Length::half_grid_below() const {
  // largest even q strictly below q_
  std::int64_t h = floor_div(q_ - 1, 2);
  return Length(2 * h);
}

double Length::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(q_) / 4.0;
}

std::string Length::str() const {
  if (is_infinite()) return "inf";
  std::int64_t whole = floor_div(q_, 4);
  std::int64_t frac = q_ - 4 * whole;
  static const char* tails[] = {"", ".25", ".5", ".75"};
  if (whole < 0 && frac != 0) {
    // render negative non-integers as -(|x|)
    Length neg(-q_);
    return "-" + neg.str();
  }
  return std::to_string(whole) + tails[frac];
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace qtree
