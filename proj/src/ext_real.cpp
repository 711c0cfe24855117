#include "slopekit/ext_real.hpp"

#include <charconv>

namespace slopekit {

std::string ExtReal::str() const {
  if (is_inf()) return "inf";
  // Shortest digit string that parses back to the exact value.
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v_);
  return std::string(buf, res.ptr);
}

ExtReal diff_pos(const ExtReal& a, const ExtReal& b) {
  if (a.is_inf() && b.is_inf()) {
    throw std::logic_error("diff_pos: inf - inf");
  }
  if (b.is_inf()) return ExtReal(0.0);
  if (a.is_inf()) return ExtReal::infinity();
  double d = a.raw() - b.raw();
  return ExtReal(d > 0.0 ? d : 0.0);
}

ExtReal extreal_div(const ExtReal& num, const ExtReal& den, const ExtReal& zero_over_zero) {
  if (num.raw() < 0.0 || den.raw() < 0.0) {
    throw std::invalid_argument("extreal_div: arguments must be nonnegative");
  }
  if (den.is_inf()) {
    if (num.is_inf()) throw std::logic_error("extreal_div: inf/inf");
    return ExtReal(0.0);
  }
  if (num.is_inf()) return ExtReal::infinity();
  if (den.raw() > 0.0) return ExtReal(num.raw() / den.raw());
  if (num.raw() > 0.0) return ExtReal::infinity();
  return zero_over_zero;
}

}  // namespace slopekit
