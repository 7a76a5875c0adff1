#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace primspec {

// Exact rational with 64-bit numerator and denominator, always reduced with a
// positive denominator. Operations that would overflow throw
// std::overflow_error.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // "p/q" or "p", optional leading '-'. Throws ValidationError.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, std::int64_t d);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  // "p/q", or "p" when q = 1.
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A point e^{2πi·turn} of the unit circle, turn ∈ [0, 1).
class CirclePoint {
 public:
  constexpr CirclePoint() noexcept = default;
  // Throws ValidationError unless 0 ≤ turn < 1.
  explicit CirclePoint(Rational turn);
  static CirclePoint parse(std::string_view text) {
    return CirclePoint(Rational::parse(text));
  }

  const Rational& turn() const noexcept { return turn_; }
  std::string to_string() const { return turn_.to_string(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend auto operator<=>(const CirclePoint&, const CirclePoint&) = default;

 private:
  Rational turn_;
};

// A finite union of points and arcs of the circle, with rational endpoints.
//
// Stored as disjoint, merged intervals of [0, 1) in increasing order; the
// only interval that may reach 1 is open there. A point is a closed interval
// of length zero. The representation is canonical, so equality is exact.
//
// Text form: "T" for the whole circle, "" for the empty set, otherwise a
// comma-separated list of "point:t" and "arc:<lo,hi>" items where each
// bracket is '[' or '(' / ']' or ')'. Arcs run counterclockwise from lo to
// hi and wrap through 0 when lo > hi; lo == hi denotes a full turn (minus
// the endpoint when both brackets are open).
class CircleSet {
 public:
  struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed;
    bool hi_closed;

    friend bool operator==(const Interval&, const Interval&) = default;
  };

  CircleSet() = default;

  static CircleSet empty() { return {}; }
  static CircleSet all();
  static CircleSet point(CirclePoint t);
  static CircleSet arc(CirclePoint lo, CirclePoint hi, bool lo_closed,
                       bool hi_closed);
  // Throws ValidationError.
  static CircleSet parse(std::string_view text);

  bool is_empty() const noexcept { return intervals_.empty(); }
  bool is_all() const noexcept;
  bool contains(const CirclePoint& t) const;
  bool is_subset_of(const CircleSet& other) const;
  // Every rational that bounds an interval, reduced into [0, 1).
  std::vector<CirclePoint> endpoints() const;
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  friend CircleSet operator|(const CircleSet& a, const CircleSet& b);
  friend bool operator==(const CircleSet&, const CircleSet&) = default;

  std::string to_string() const;

 private:
  explicit CircleSet(std::vector<Interval> raw);
  void normalize();

  std::vector<Interval> intervals_;
};

// Topological closure in the circle: arcs gain their endpoints, points stay.
CircleSet circle_closure(const CircleSet& d);

}  // namespace primspec
