#include "thermocat/alpha.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "thermocat/error.hpp"
#include "thermocat/io.hpp"

namespace thermocat {

Alpha Alpha::finite(double x) {
  if (std::isnan(x)) fail(ErrorCode::DomainError, "alpha is NaN");
  if (x == std::numeric_limits<double>::infinity()) return pos_infinity();
  if (x == -std::numeric_limits<double>::infinity()) return neg_infinity();
  if (x == 0.0) return zero();
  if (x == 1.0) return one();
  return Alpha(Tag::Finite, x);
}

Alpha Alpha::pos_infinity() { return Alpha(Tag::PosInfinity, std::numeric_limits<double>::infinity()); }
Alpha Alpha::neg_infinity() { return Alpha(Tag::NegInfinity, -std::numeric_limits<double>::infinity()); }

std::string to_string(Alpha a) {
  switch (a.tag()) {
    case Alpha::Tag::Zero: return "0";
    case Alpha::Tag::One: return "1";
    case Alpha::Tag::PosInfinity: return "inf";
    case Alpha::Tag::NegInfinity: return "-inf";
    case Alpha::Tag::Finite: break;
  }
  return format_short(a.value());
}

Alpha parse_alpha(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity") {
    return Alpha::pos_infinity();
  }
  if (text == "-inf" || text == "-infinity") return Alpha::neg_infinity();
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    fail(ErrorCode::DomainError, "cannot parse alpha '" + text + "'");
  }
  return Alpha::finite(v);
}

std::vector<Alpha> default_alpha_grid() {
  std::vector<Alpha> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(Alpha::finite(k / 20.0));
  for (int k = 5; k <= 10; ++k) grid.push_back(Alpha::finite(k / 2.0));
  grid.push_back(Alpha::finite(10.0));
  grid.push_back(Alpha::finite(30.0));
  grid.push_back(Alpha::pos_infinity());
  return grid;
}

}  // namespace thermocat
