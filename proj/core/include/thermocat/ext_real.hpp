#pragma once

#include <cmath>
#include <compare>
#include <limits>

namespace thermocat {

/// A real number or +infinity. Divergences take the value +infinity when the
/// support condition of the reference fails; that is a result, not an error.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal infinity() { return ExtReal(std::numeric_limits<double>::infinity()); }

  constexpr bool is_finite() const { return value_ != std::numeric_limits<double>::infinity(); }
  constexpr bool is_infinite() const { return !is_finite(); }
  constexpr double value() const { return value_; }

  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtReal(a.value_ + b.value_);
  }
  friend constexpr ExtReal max(ExtReal a, ExtReal b) { return a.value_ < b.value_ ? b : a; }

  // Total order: every finite value sits below +infinity.
  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.value_ == b.value_; }
  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
};

}  // namespace thermocat
