#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace primspec {

// A cardinal in {0, 1, 2, ...} ∪ {ω}. Finite values are bounded by
// max_finite; arithmetic that would exceed it throws std::overflow_error.
class Cardinality {
 public:
  static constexpr std::uint64_t max_finite =
      static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

  constexpr Cardinality() noexcept = default;
  // Throws std::overflow_error if n > max_finite.
  explicit Cardinality(std::uint64_t n);

  static constexpr Cardinality omega() noexcept {
    Cardinality c;
    c.omega_ = true;
    return c;
  }

  constexpr bool is_omega() const noexcept { return omega_; }
  constexpr bool is_finite() const noexcept { return !omega_; }
  constexpr bool is_zero() const noexcept { return !omega_ && value_ == 0; }

  // Throws std::logic_error on ω.
  std::uint64_t value() const;

  Cardinality& operator+=(const Cardinality& other);
  friend Cardinality operator+(Cardinality a, const Cardinality& b) {
    a += b;
    return a;
  }
  // 0 · ω = 0, otherwise ω absorbs.
  friend Cardinality operator*(const Cardinality& a, const Cardinality& b);

  friend constexpr bool operator==(const Cardinality&,
                                   const Cardinality&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(
      const Cardinality& a, const Cardinality& b) noexcept {
    if (a.omega_ != b.omega_) return a.omega_ ? std::strong_ordering::greater
                                              : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  // Decimal digits, or "inf" for ω.
  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

}  // namespace primspec
