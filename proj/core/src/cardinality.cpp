#include "primspec/cardinality.hpp"

#include <stdexcept>

namespace primspec {

Cardinality::Cardinality(std::uint64_t n) : value_(n) {
  if (n > max_finite) throw std::overflow_error("cardinality exceeds 2^63-1");
}

std::uint64_t Cardinality::value() const {
  if (omega_) throw std::logic_error("value() of an infinite cardinality");
  return value_;
}

Cardinality& Cardinality::operator+=(const Cardinality& other) {
  if (omega_) return *this;
  if (other.omega_) {
    *this = omega();
    return *this;
  }
  if (other.value_ > max_finite - value_)
    throw std::overflow_error("cardinality sum exceeds 2^63-1");
  value_ += other.value_;
  return *this;
}

Cardinality operator*(const Cardinality& a, const Cardinality& b) {
  if (a.is_zero() || b.is_zero()) return Cardinality{};
  if (a.omega_ || b.omega_) return Cardinality::omega();
  if (a.value_ > Cardinality::max_finite / b.value_)
    throw std::overflow_error("cardinality product exceeds 2^63-1");
  return Cardinality(a.value_ * b.value_);
}

std::string Cardinality::to_string() const {
  return omega_ ? std::string("inf") : std::to_string(value_);
}

}  // namespace primspec
