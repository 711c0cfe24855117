#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace slopekit {

// Extended real value: any finite double, or +infinity.
//
// Slope and modulus computations routinely produce +infinity (empty bands,
// empty subgradient sets, indicator functions), so the value type admits it
// as a first-class citizen. NaN and -infinity are rejected at construction,
// which keeps the order total and comparisons trustworthy.
class ExtReal {
 public:
  ExtReal() = default;

  // Implicit on purpose: finite literals should read naturally at call sites.
  ExtReal(double v) : v_(v) {
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("ExtReal: value must be finite or +inf");
    }
  }

  static ExtReal infinity() {
    ExtReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  bool finite() const { return std::isfinite(v_); }
  bool is_inf() const { return !finite(); }

  // Raw double view; +inf maps to the IEEE infinity, so <, ==, min, max all
  // behave as the extended order demands.
  double raw() const { return v_; }

  // Finite value accessor; misuse is a logic error, not a numeric accident.
  double value() const {
    if (!finite()) throw std::logic_error("ExtReal: value() on +inf");
    return v_;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExtReal& a, const ExtReal& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return a.v_ >= b.v_; }

  // Addition with +inf absorption. Subtraction is deliberately absent; the
  // only difference the toolkit forms is a clipped one, see diff_pos below.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    return ExtReal(a.v_ + b.v_);
  }

  std::string str() const;

 private:
  double v_ = 0.0;
};

inline ExtReal ext_min(const ExtReal& a, const ExtReal& b) { return a <= b ? a : b; }
inline ExtReal ext_max(const ExtReal& a, const ExtReal& b) { return a >= b ? a : b; }

// max(v, 0); +inf stays +inf.
inline ExtReal positive_part(const ExtReal& v) {
  if (v.is_inf()) return ExtReal::infinity();
  return ExtReal(v.raw() > 0.0 ? v.raw() : 0.0);
}

// Clipped difference [a - b]_+ where b may be +inf (result 0) and a may be
// +inf (result +inf when b finite). Both +inf is a logic error: such pairs
// never reach a slope numerator because probe points require finite values.
ExtReal diff_pos(const ExtReal& a, const ExtReal& b);

// Quotient of two nonnegative extended reals with an explicit 0/0 policy.
// Every ratio in the toolkit goes through here, so the conventions sit in
// one audited place:
//   p/q        -> ordinary quotient              (p, q finite, q > 0)
//   p/0        -> +inf                           (p > 0)
//   0/0        -> zero_over_zero                 (caller decides)
//   p/inf      -> 0                              (p finite)
//   inf/q      -> +inf                           (q finite)
//   inf/inf    -> logic error (never meaningful here)
ExtReal extreal_div(const ExtReal& num, const ExtReal& den, const ExtReal& zero_over_zero);

}  // namespace slopekit
