// Copyright 2026 The wrightcont Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WRIGHTCONT_INTERVAL_HPP_
#define WRIGHTCONT_INTERVAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "wrightcont/errors.hpp"

// Outward-rounded interval arithmetic over IEEE-754 binary64.
//
// Rounding strategy: every elementary operation is computed in the default
// round-to-nearest mode and its endpoint is then corrected with an
// error-free transform (TwoSum for +/-, a correctly rounded fma residual
// for * and /). When the residual shows the rounded result sits on the
// wrong side of the exact one, the endpoint is nudged one ulp outward with
// nextafter. Exact results stay exact. No rounding-mode switching is ever
// performed, so evaluation is pure, thread-safe and bit-deterministic.
//
// Requirements on the platform: IEEE-754 binary64 arithmetic and a
// correctly rounded std::fma. Compile without -ffast-math and with
// -ffp-contract=off.

namespace wrightcont {

namespace rnd {

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Knuth TwoSum: returns the exact error of fl(a+b), valid whenever the sum
// and its intermediates do not overflow.
inline double two_sum_err(double a, double b, double s) {
  double ap = s - b;
  double bp = s - ap;
  return (a - ap) + (b - bp);
}

// Below this magnitude the fma residual of a product may itself be subject
// to underflow, so we stop trusting exactness and nudge unconditionally.
inline constexpr double kUnderflowGuard = 1e-280;

inline double add_down(double a, double b) {
  double s = a + b;
  if (std::isinf(s)) return s < 0 ? s : std::numeric_limits<double>::max();
  double e = two_sum_err(a, b, s);
  return e < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  double s = a + b;
  if (std::isinf(s)) return s > 0 ? s : -std::numeric_limits<double>::max();
  double e = two_sum_err(a, b, s);
  return e > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  double p = a * b;
  if (std::isinf(p)) return p < 0 ? p : std::numeric_limits<double>::max();
  if (a == 0.0 || b == 0.0) return 0.0;
  if (std::fabs(p) < kUnderflowGuard) return next_down(p);
  double e = std::fma(a, b, -p);
  return e < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  double p = a * b;
  if (std::isinf(p)) return p > 0 ? p : -std::numeric_limits<double>::max();
  if (a == 0.0 || b == 0.0) return 0.0;
  if (std::fabs(p) < kUnderflowGuard) return next_up(p);
  double e = std::fma(a, b, -p);
  return e > 0 ? next_up(p) : p;
}

// q = fl(a/b) and r = fma(q, b, -a) give q - a/b = r/b exactly, provided
// q*b does not underflow; same guard as multiplication.
inline double div_down(double a, double b) {
  double q = a / b;
  if (std::isinf(q)) return q < 0 ? q : std::numeric_limits<double>::max();
  if (a == 0.0) return 0.0;
  if (std::fabs(a) < kUnderflowGuard || std::fabs(q) < kUnderflowGuard)
    return next_down(q);
  double r = std::fma(q, b, -a);
  bool q_high = (r > 0) == (b > 0);  // r/b > 0  <=>  q > a/b
  return (r != 0 && q_high) ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  double q = a / b;
  if (std::isinf(q)) return q > 0 ? q : -std::numeric_limits<double>::max();
  if (a == 0.0) return 0.0;
  if (std::fabs(a) < kUnderflowGuard || std::fabs(q) < kUnderflowGuard)
    return next_up(q);
  double r = std::fma(q, b, -a);
  bool q_low = (r != 0) && ((r > 0) != (b > 0));  // q < a/b
  return q_low ? next_up(q) : q;
}

}  // namespace rnd

/// A closed interval [lo, hi] of doubles. Every arithmetic result encloses
/// the exact real result over all members of the operands.
class interval {
 public:
  interval() : lo_(0.0), hi_(0.0) {}

  // NOLINTNEXTLINE(google-explicit-constructor): point intervals are the
  // bridge between plain floats and enclosures; implicit by design.
  interval(double point) : lo_(point), hi_(point) {
    if (std::isnan(point)) throw domain_error("interval: NaN endpoint");
  }

  interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi))
      throw domain_error("interval: NaN endpoint");
    if (lo > hi) throw domain_error("interval: lo > hi");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// Upper bound for sup{|x| : x in this}.
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

  /// Lower bound for inf{|x| : x in this} (0 when the interval straddles 0).
  double mig() const {
    if (contains_zero()) return 0.0;
    return std::min(std::fabs(lo_), std::fabs(hi_));
  }

  double mid() const {
    double m = 0.5 * (lo_ + hi_);
    if (!std::isfinite(m)) m = 0.5 * lo_ + 0.5 * hi_;
    return m;
  }

  /// Upper bound of the diameter hi - lo.
  double width() const { return rnd::sub_up(hi_, lo_); }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool intersects(const interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  /// Certain comparison: every member of this is < every member of rhs.
  bool certainly_less(const interval& rhs) const { return hi_ < rhs.lo_; }
  bool certainly_negative() const { return hi_ < 0.0; }
  bool certainly_positive() const { return lo_ > 0.0; }

  interval operator-() const { return interval(-hi_, -lo_, unchecked{}); }

  interval& operator+=(const interval& r) { return *this = *this + r; }
  interval& operator-=(const interval& r) { return *this = *this - r; }
  interval& operator*=(const interval& r) { return *this = *this * r; }
  interval& operator/=(const interval& r) { return *this = *this / r; }

  friend interval operator+(const interval& a, const interval& b) {
    return interval(rnd::add_down(a.lo_, b.lo_), rnd::add_up(a.hi_, b.hi_),
                    unchecked{});
  }

  friend interval operator-(const interval& a, const interval& b) {
    return interval(rnd::sub_down(a.lo_, b.hi_), rnd::sub_up(a.hi_, b.lo_),
                    unchecked{});
  }

  friend interval operator*(const interval& a, const interval& b) {
    double d1 = rnd::mul_down(a.lo_, b.lo_), d2 = rnd::mul_down(a.lo_, b.hi_);
    double d3 = rnd::mul_down(a.hi_, b.lo_), d4 = rnd::mul_down(a.hi_, b.hi_);
    double u1 = rnd::mul_up(a.lo_, b.lo_), u2 = rnd::mul_up(a.lo_, b.hi_);
    double u3 = rnd::mul_up(a.hi_, b.lo_), u4 = rnd::mul_up(a.hi_, b.hi_);
    return interval(std::min(std::min(d1, d2), std::min(d3, d4)),
                    std::max(std::max(u1, u2), std::max(u3, u4)), unchecked{});
  }

  friend interval operator/(const interval& a, const interval& b) {
    if (b.contains_zero())
      throw domain_error("interval division by interval containing zero");
    double d1 = rnd::div_down(a.lo_, b.lo_), d2 = rnd::div_down(a.lo_, b.hi_);
    double d3 = rnd::div_down(a.hi_, b.lo_), d4 = rnd::div_down(a.hi_, b.hi_);
    double u1 = rnd::div_up(a.lo_, b.lo_), u2 = rnd::div_up(a.lo_, b.hi_);
    double u3 = rnd::div_up(a.hi_, b.lo_), u4 = rnd::div_up(a.hi_, b.hi_);
    return interval(std::min(std::min(d1, d2), std::min(d3, d4)),
                    std::max(std::max(u1, u2), std::max(u3, u4)), unchecked{});
  }

  /// Smallest interval containing both operands.
  friend interval hull(const interval& a, const interval& b) {
    return interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_),
                    unchecked{});
  }

  /// Enclosure of max(x, y) over the operands.
  friend interval imax(const interval& a, const interval& b) {
    return interval(std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_),
                    unchecked{});
  }

  /// Enclosure of |x| over the interval.
  friend interval iabs(const interval& a) {
    return interval(a.mig(), a.mag(), unchecked{});
  }

  /// Enclosure of x^2 (sharper than x*x for sign-straddling intervals).
  friend interval sqr(const interval& a) {
    double lo_abs = a.mig(), hi_abs = a.mag();
    return interval(rnd::mul_down(lo_abs, lo_abs),
                    rnd::mul_up(hi_abs, hi_abs), unchecked{});
  }

 private:
  struct unchecked {};
  interval(double lo, double hi, unchecked) : lo_(lo), hi_(hi) {}

  double lo_;
  double hi_;
};

inline interval operator+(double a, const interval& b) { return interval(a) + b; }
inline interval operator+(const interval& a, double b) { return a + interval(b); }
inline interval operator-(double a, const interval& b) { return interval(a) - b; }
inline interval operator-(const interval& a, double b) { return a - interval(b); }
inline interval operator*(double a, const interval& b) { return interval(a) * b; }
inline interval operator*(const interval& a, double b) { return a * interval(b); }
inline interval operator/(double a, const interval& b) { return interval(a) / b; }
inline interval operator/(const interval& a, double b) { return a / interval(b); }

/// Enclosure of x^n for integer n >= 0.
inline interval ipow(const interval& x, int n) {
  if (n < 0) throw domain_error("ipow: negative exponent");
  if (n == 0) return interval(1.0);
  if (n % 2 == 0) {
    interval sq = sqr(x);
    interval acc = sq;
    for (int i = 2; i < n; i += 2) acc *= sq;
    return acc;
  }
  interval acc = x;
  for (int i = 1; i < n; ++i) acc *= x;
  return acc;
}

// Certified brackets of the constants the engine needs. The unit tests
// re-derive pi from interval Machin series and ln 2 from its artanh series
// to guard these literals.
inline interval pi_interval() {
  return interval(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1);
}
inline interval half_pi_interval() {
  return interval(0x1.921fb54442d18p+0, 0x1.921fb54442d19p+0);
}
inline interval two_pi_interval() {
  return interval(0x1.921fb54442d18p+2, 0x1.921fb54442d19p+2);
}
inline interval ln2_interval() {
  return interval(0x1.62e42fefa39efp-1, 0x1.62e42fefa39f0p-1);
}

namespace detail {

// Factorial as an interval (exact up to 18!, enclosed beyond).
inline interval ifactorial(int n) {
  interval f(1.0);
  for (int i = 2; i <= n; ++i) f *= interval(static_cast<double>(i));
  return f;
}

// sin on |theta| <= 0.9 by its Taylor series with a rigorous remainder.
inline interval sin_small(const interval& theta) {
  const int terms = 9;  // odd powers 1..17, remainder power 19
  interval t2 = sqr(theta);
  interval sum(0.0);
  interval power = theta;
  for (int j = 0; j < terms; ++j) {
    interval term = power / ifactorial(2 * j + 1);
    sum += (j % 2 == 0) ? term : -term;
    power *= t2;
  }
  double rem = (ipow(interval(theta.mag()), 19) / ifactorial(19)).hi();
  return sum + interval(-rem, rem);
}

// cos on |theta| <= 0.9, same construction.
inline interval cos_small(const interval& theta) {
  const int terms = 10;  // even powers 0..18, remainder power 20
  interval t2 = sqr(theta);
  interval sum(0.0);
  interval power(1.0);
  for (int j = 0; j < terms; ++j) {
    interval term = power / ifactorial(2 * j);
    sum += (j % 2 == 0) ? term : -term;
    power *= t2;
  }
  double rem = (ipow(interval(theta.mag()), 20) / ifactorial(20)).hi();
  return sum + interval(-rem, rem);
}

inline interval clamp_unit(const interval& x) {
  double lo = std::max(x.lo(), -1.0);
  double hi = std::min(x.hi(), 1.0);
  return interval(lo, hi);
}

// Enclosure of sin at a single double, via reduction by the nearest
// multiple of the pi/2 bracket.
inline interval sin_at_point(double t) {
  if (std::fabs(t) > 1e15) return interval(-1.0, 1.0);
  double n = std::nearbyint(t / 1.5707963267948966);
  interval theta = interval(t) - interval(n) * half_pi_interval();
  if (theta.mag() > 0.9) return interval(-1.0, 1.0);
  int q = static_cast<int>(((static_cast<long long>(n) % 4) + 4) % 4);
  switch (q) {
    case 0: return clamp_unit(sin_small(theta));
    case 1: return clamp_unit(cos_small(theta));
    case 2: return clamp_unit(-sin_small(theta));
    default: return clamp_unit(-cos_small(theta));
  }
}

inline interval cos_at_point(double t) {
  if (std::fabs(t) > 1e15) return interval(-1.0, 1.0);
  double n = std::nearbyint(t / 1.5707963267948966);
  interval theta = interval(t) - interval(n) * half_pi_interval();
  if (theta.mag() > 0.9) return interval(-1.0, 1.0);
  int q = static_cast<int>(((static_cast<long long>(n) % 4) + 4) % 4);
  switch (q) {
    case 0: return clamp_unit(cos_small(theta));
    case 1: return clamp_unit(-sin_small(theta));
    case 2: return clamp_unit(-cos_small(theta));
    default: return clamp_unit(sin_small(theta));
  }
}

// Extrema scan shared by sin/cos: walks the multiples of pi/2 that might
// lie inside x and pins the endpoint to +-1 when one does. The residue of
// the multiple mod 4 tells whether it hosts a maximum or a minimum.
template <typename EndpointFn>
inline interval trig_enclosure(const interval& x, EndpointFn at_point,
                               int max_residue, int min_residue) {
  if (!std::isfinite(x.lo()) || !std::isfinite(x.hi()))
    throw domain_error("trig of non-finite interval");
  if (x.width() >= two_pi_interval().hi() || std::fabs(x.lo()) > 1e15 ||
      std::fabs(x.hi()) > 1e15)
    return interval(-1.0, 1.0);
  interval result = hull(at_point(x.lo()), at_point(x.hi()));
  double lo_bnd = result.lo(), hi_bnd = result.hi();
  long long n_lo =
      static_cast<long long>(std::floor(x.lo() / 1.5707963267948966)) - 1;
  long long n_hi =
      static_cast<long long>(std::ceil(x.hi() / 1.5707963267948966)) + 1;
  for (long long n = n_lo; n <= n_hi; ++n) {
    interval crit = interval(static_cast<double>(n)) * half_pi_interval();
    if (!crit.intersects(x)) continue;
    int residue = static_cast<int>(((n % 4) + 4) % 4);
    if (residue == max_residue) hi_bnd = 1.0;
    if (residue == min_residue) lo_bnd = -1.0;
  }
  return clamp_unit(interval(std::min(lo_bnd, hi_bnd), std::max(lo_bnd, hi_bnd)));
}

}  // namespace detail

/// Rigorous enclosure of sin over the interval; always a subset of [-1, 1].
inline interval sin(const interval& x) {
  return detail::trig_enclosure(x, detail::sin_at_point, 1, 3);
}

/// Rigorous enclosure of cos over the interval; always a subset of [-1, 1].
inline interval cos(const interval& x) {
  return detail::trig_enclosure(x, detail::cos_at_point, 0, 2);
}

namespace detail {

// ln at a single positive double: mantissa reduced into [1/sqrt2, sqrt2),
// artanh series with rigorous remainder, exponent recombined with the ln 2
// bracket.
inline interval log_at_point(double v) {
  int e = 0;
  double man = std::frexp(v, &e);  // v = man * 2^e, man in [0.5, 1)
  if (man < 0.70710678118654752) {
    man *= 2.0;
    e -= 1;
  }
  interval t = (interval(man) - 1.0) / (interval(man) + 1.0);
  interval t2 = sqr(t);
  interval sum(0.0);
  interval power = t;
  const int terms = 13;  // odd powers 1..25, remainder power 27
  for (int j = 0; j < terms; ++j) {
    sum += power / interval(static_cast<double>(2 * j + 1));
    power *= t2;
  }
  // Remainder of the artanh series: |t|^27 / (27 (1 - t^2)).
  double tm = t.mag();
  double rem =
      (ipow(interval(tm), 27) /
       (interval(27.0) * interval(rnd::sub_down(1.0, rnd::mul_up(tm, tm)))))
          .hi();
  interval ln_man = interval(2.0) * (sum + interval(-rem, rem));
  return ln_man + interval(static_cast<double>(e)) * ln2_interval();
}

}  // namespace detail

/// Rigorous enclosure of the natural log; requires x.lo() > 0.
inline interval log(const interval& x) {
  if (!(x.lo() > 0.0)) throw domain_error("log of nonpositive interval");
  return interval(detail::log_at_point(x.lo()).lo(),
                  detail::log_at_point(x.hi()).hi());
}

}  // namespace wrightcont

#endif  // WRIGHTCONT_INTERVAL_HPP_
