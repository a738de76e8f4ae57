#pragma once

#include <string>
#include <vector>

namespace thermocat {

/// Order of an entropy or divergence: a finite real or one of the symbolic
/// limits. Finite 0 and 1 are normalized to the Zero and One tags so that the
/// limiting formulas are always the ones evaluated there.
class Alpha {
 public:
  enum class Tag { Finite, Zero, One, PosInfinity, NegInfinity };

  static Alpha finite(double x);
  static constexpr Alpha zero() { return Alpha(Tag::Zero, 0.0); }
  static constexpr Alpha one() { return Alpha(Tag::One, 1.0); }
  static Alpha pos_infinity();
  static Alpha neg_infinity();

  constexpr Tag tag() const { return tag_; }
  /// Numeric value; +-infinity for the infinite tags.
  constexpr double value() const { return value_; }

  constexpr bool is_finite() const { return tag_ != Tag::PosInfinity && tag_ != Tag::NegInfinity; }
  constexpr bool is_one() const { return tag_ == Tag::One; }
  constexpr bool is_zero() const { return tag_ == Tag::Zero; }

  /// +1 for alpha >= 0 (including +infinity), -1 for alpha < 0.
  constexpr double sgn() const { return value_ >= 0.0 ? 1.0 : -1.0; }

  friend constexpr bool operator==(Alpha a, Alpha b) { return a.tag_ == b.tag_ && a.value_ == b.value_; }

 private:
  constexpr Alpha(Tag t, double v) : tag_(t), value_(v) {}

  Tag tag_;
  double value_;
};

/// Short label: "0", "1", "inf", "-inf" or the shortest round-trip decimal.
std::string to_string(Alpha a);

/// Parses a label produced by to_string (also accepts "+inf", "infinity").
/// Throws Error(DomainError) on malformed input.
Alpha parse_alpha(const std::string& text);

/// {0, 0.05, ..., 1.95, 2, 2.5, ..., 5, 10, 30, inf}.
std::vector<Alpha> default_alpha_grid();

}  // namespace thermocat
