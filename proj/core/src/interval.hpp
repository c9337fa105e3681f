#pragma once

// Interval arithmetic used as the floating-point filter in front of the
// rational predicates. Round-to-nearest results are widened by one ulp only
// when the error-free transformation says the result was inexact, so exact
// computations (the common degenerate case on grid-like input) keep a
// zero-width interval and their sign is decided without falling back.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

namespace zigzag::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude a product may have lost bits to gradual underflow and
// the fma error term is no longer exact.
inline constexpr double kUnderflowGuard = 0x1p-900;

// One ulp towards +inf / -inf for finite x; cheaper than std::nextafter.
inline double next_up(double x) {
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  const auto bits = std::bit_cast<std::int64_t>(x);
  return std::bit_cast<double>(x > 0 ? bits + 1 : bits - 1);
}

inline double next_down(double x) { return -next_up(-x); }

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return -kInf;
  const double bv = s - a;
  const double av = s - bv;
  const double err = (a - av) + (b - bv);
  return err < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return kInf;
  const double bv = s - a;
  const double av = s - bv;
  const double err = (a - av) + (b - bv);
  return err > 0 ? next_up(s) : s;
}

inline double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) return -kInf;
  if (std::abs(p) < kUnderflowGuard) return next_down(p);
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) return kInf;
  if (std::abs(p) < kUnderflowGuard) return next_up(p);
  return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

class Interval {
 public:
  Interval() = default;
  explicit Interval(double v) : lo_(v), hi_(v) {}
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {add_down(a.lo_, b.lo_), add_up(a.hi_, b.hi_)};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {add_down(a.lo_, -b.hi_), add_up(a.hi_, -b.lo_)};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

  friend Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo_ == a.hi_ && b.lo_ == b.hi_) {
      return {mul_down(a.lo_, b.lo_), mul_up(a.lo_, b.lo_)};
    }
    const double lo = std::min({mul_down(a.lo_, b.lo_), mul_down(a.lo_, b.hi_),
                                mul_down(a.hi_, b.lo_), mul_down(a.hi_, b.hi_)});
    const double hi = std::max({mul_up(a.lo_, b.lo_), mul_up(a.lo_, b.hi_),
                                mul_up(a.hi_, b.lo_), mul_up(a.hi_, b.hi_)});
    return {lo, hi};
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// Sign of the enclosed value, or nullopt when the interval straddles zero
/// (or went non-finite).
inline std::optional<int> sign_of(const Interval& v) {
  if (v.lo() > 0) return 1;
  if (v.hi() < 0) return -1;
  if (v.lo() == 0 && v.hi() == 0) return 0;
  return std::nullopt;
}

}  // namespace zigzag::detail
