#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace qtree {

using Vertex = int;

/// Exact length on the quarter-edge grid. One edge has length 4 quarters.
///
/// Every metric quantity the toolkit reports (hyperbolicity, Hausdorff
/// distances, density radii, bottleneck constants) is a multiple of 1/4, so
/// lengths are integers here and no comparison ever needs a tolerance.
class Length {
 public:
  constexpr Length() = default;

  static constexpr Length quarters(std::int64_t q) { return Length(q); }
  static constexpr Length halves(std::int64_t h) { return Length(2 * h); }
  static constexpr Length units(std::int64_t u) { return Length(4 * u); }
  static constexpr Length infinity() { return Length(kInfinite); }

  constexpr std::int64_t in_quarters() const { return q_; }
  constexpr bool is_infinite() const { return q_ == kInfinite; }

  /// Largest whole number of edges not exceeding this length.
  std::int64_t floor_units() const;
  /// Smallest whole number of edges not below this length.
  std::int64_t ceil_units() const;
  /// Largest multiple of 1/2 strictly below this length.
  Length half_grid_below() const;

  double to_double() const;
  /// Decimal rendering, e.g. "2", "2.5", "2.25", or "inf".
  std::string str() const;

  constexpr auto operator<=>(const Length&) const = default;

  friend constexpr Length operator+(Length a, Length b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Length(a.q_ + b.q_);
  }
  friend constexpr Length operator-(Length a, Length b) { return Length(a.q_ - b.q_); }
  friend constexpr Length operator*(std::int64_t k, Length a) {
    return a.is_infinite() ? a : Length(k * a.q_);
  }

 private:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
  constexpr explicit Length(std::int64_t q) : q_(q) {}
  std::int64_t q_ = 0;
};

inline Length max(Length a, Length b) { return a < b ? b : a; }
inline Length min(Length a, Length b) { return a < b ? a : b; }

/// Outcome shared by every check in the toolkit.
enum class Status { pass, fail, vacuous, inconclusive };

const char* to_string(Status s);

}  // namespace qtree
