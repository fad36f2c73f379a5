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

#ifndef WRIGHTCONT_FOURIER_SPACE_HPP_
#define WRIGHTCONT_FOURIER_SPACE_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "wrightcont/errors.hpp"
#include "wrightcont/interval.hpp"
#include "wrightcont/linalg.hpp"

// The sequence space of Fourier data (L, a0, a1, b1, ...) with weighted sup
// norm ||x||_s = sup_k |x_k|_inf w_k, w_0 = 1, w_k = k^s. A point with m
// modes is identified with the infinite sequence having zero tail.

namespace wrightcont {

/// Finite Fourier datum: entries ordered (L, a0, a1, b1, ..., a_{m-1}, b_{m-1}).
template <typename T>
struct galerkin_point {
  int m = 0;
  std::vector<T> entries;

  galerkin_point() = default;
  explicit galerkin_point(int modes) : m(modes), entries(2 * modes, T(0)) {}

  const T& L() const { return entries[0]; }
  T& L() { return entries[0]; }
  const T& a0() const { return entries[1]; }
  T& a0() { return entries[1]; }

  // a_k / b_k for k >= 1.
  const T& a(int k) const { return entries[2 * k]; }
  T& a(int k) { return entries[2 * k]; }
  const T& b(int k) const { return entries[2 * k + 1]; }
  T& b(int k) { return entries[2 * k + 1]; }

  /// Symmetric coefficient access over all integers: a_{-k} = a_k,
  /// b_{-k} = -b_k, b_0 = 0, zero outside the support.
  T sym_a(int k) const {
    int j = k < 0 ? -k : k;
    if (j >= m) return T(0);
    return j == 0 ? a0() : a(j);
  }
  T sym_b(int k) const {
    int j = k < 0 ? -k : k;
    if (j == 0 || j >= m) return T(0);
    return k < 0 ? T(-b(j)) : b(j);
  }
};

using gpoint = galerkin_point<double>;
using igpoint = galerkin_point<interval>;

template <typename T>
galerkin_point<T> zero_padded(const galerkin_point<T>& x, int new_m) {
  if (new_m < x.m) throw shape_error("zero_padded: cannot shrink support");
  galerkin_point<T> out(new_m);
  for (std::size_t i = 0; i < x.entries.size(); ++i) out.entries[i] = x.entries[i];
  return out;
}

inline igpoint promote(const gpoint& x) {
  igpoint out(x.m);
  for (std::size_t i = 0; i < x.entries.size(); ++i)
    out.entries[i] = interval(x.entries[i]);
  return out;
}

/// w_k = k^s (w_0 = 1), exact for the mode counts in play.
inline interval weight(int k, int s) {
  if (k <= 0) return interval(1.0);
  return ipow(interval(static_cast<double>(k)), s);
}

/// Mode index of entry j in the (L, a0, a1, b1, ...) layout.
inline int entry_mode(std::size_t j) { return j < 2 ? 0 : static_cast<int>(j / 2); }

/// Enclosure of ||x||_s = max_{k < m} |x_k|_inf w_k (zero tail contributes 0).
inline interval norm_s(const igpoint& x, int s) {
  if (s < 2) throw domain_error("norm_s: s must be >= 2");
  interval best(0.0);
  for (int k = 0; k < x.m; ++k) {
    interval comp = k == 0 ? imax(iabs(x.L()), iabs(x.a0()))
                           : imax(iabs(x.a(k)), iabs(x.b(k)));
    best = imax(best, comp * weight(k, s));
  }
  return best;
}

inline interval norm_s(const gpoint& x, int s) { return norm_s(promote(x), s); }

/// Predictor x = xbar + delta * xdot, componentwise; generic over scalar.
template <typename T, typename S>
auto predictor(const galerkin_point<T>& xbar, const galerkin_point<T>& xdot,
               const S& delta) {
  if (xbar.m != xdot.m) throw shape_error("predictor: support mismatch");
  using R = decltype(xbar.entries[0] + delta * xdot.entries[0]);
  galerkin_point<R> out(xbar.m);
  for (std::size_t i = 0; i < xbar.entries.size(); ++i)
    out.entries[i] = xbar.entries[i] + delta * xdot.entries[i];
  return out;
}

/// Truncated Fourier sum y(t) = a0 + 2 sum_k [a_k cos(kLt) - b_k sin(kLt)].
/// Plain floating point; diagnostic only.
inline double eval_solution(const gpoint& x, double t) {
  double y = x.a0();
  double phase = x.L() * t;
  for (int k = 1; k < x.m; ++k)
    y += 2.0 * (x.a(k) * std::cos(k * phase) - x.b(k) * std::sin(k * phase));
  return y;
}

/// A product ball in the weighted space: center entries plus the radius r,
/// meaning component j varies within center_j +- r / w_j and every tail
/// mode within [-r/w_k, r/w_k]^2. `weights` carries w_j per entry so the
/// same type serves layouts with extra head unknowns.
struct sequence_ball {
  std::vector<interval> center;
  std::vector<interval> weights;
  double radius = 0.0;
};

inline sequence_ball make_ball(const igpoint& center, double radius, int s) {
  sequence_ball ball;
  ball.center = center.entries;
  ball.weights.resize(center.entries.size());
  for (std::size_t j = 0; j < ball.weights.size(); ++j)
    ball.weights[j] = weight(entry_mode(j), s);
  ball.radius = radius;
  return ball;
}

/// Rigorous componentwise inclusion of one ball in another. Finite entries
/// are compared through interval endpoints; the infinitely many tail modes
/// reduce to r_inner <= r_outer because both tails are [-r/w_k, r/w_k]^2
/// boxes. Shorter centers are treated as zero-padded.
inline bool ball_subset(const sequence_ball& inner, const sequence_ball& outer) {
  if (!(inner.radius <= outer.radius)) return false;
  std::size_t n = std::max(inner.center.size(), outer.center.size());
  for (std::size_t j = 0; j < n; ++j) {
    interval ci = j < inner.center.size() ? inner.center[j] : interval(0.0);
    interval co = j < outer.center.size() ? outer.center[j] : interval(0.0);
    interval wi = j < inner.center.size() ? inner.weights[j]
                                          : outer.weights[j];
    interval wo = j < outer.center.size() ? outer.weights[j]
                                          : inner.weights[j];
    interval ri = interval(inner.radius) / wi;
    interval ro = interval(outer.radius) / wo;
    interval inner_hi = ci + ri;
    interval inner_lo = ci - ri;
    interval outer_hi = co + ro;
    interval outer_lo = co - ro;
    if (!(inner_hi.hi() <= outer_hi.lo())) return false;
    if (!(inner_lo.lo() >= outer_lo.hi())) return false;
  }
  return true;
}

}  // namespace wrightcont

#endif  // WRIGHTCONT_FOURIER_SPACE_HPP_
