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

#ifndef WRIGHTCONT_WRIGHT_MAP_HPP_
#define WRIGHTCONT_WRIGHT_MAP_HPP_

#include <cmath>
#include <vector>

#include "wrightcont/fourier_space.hpp"
#include "wrightcont/interval.hpp"
#include "wrightcont/linalg.hpp"

// The Fourier-side map of the delay equation y'(t) = -alpha y(t-1)[1+y(t)].
// Row pairs, for a point x = (L, a0, a1, b1, ...):
//
//   f_{0,1}(x)        = a0 + 2 sum_{k>=1} a_k                (phase fixing y(0)=0)
//   f_{k,1}(x, alpha) = (alpha cos kL) a_k + (-kL + alpha sin kL) b_k + alpha Q1_k
//   f_{k,2}(x, alpha) = (kL - alpha sin kL) a_k + (alpha cos kL) b_k + alpha Q2_k
//
// with the bilateral convolutions (negative indices by a_{-k} = a_k,
// b_{-k} = -b_k)
//
//   Q1_k = sum_{k1+k2=k} cos(k1 L)(a_{k1} a_{k2} - b_{k1} b_{k2})
//                      + sin(k1 L)(a_{k1} b_{k2} + b_{k1} a_{k2})
//   Q2_k = sum_{k1+k2=k} -sin(k1 L)(a_{k1} a_{k2} - b_{k1} b_{k2})
//                      + cos(k1 L)(a_{k1} b_{k2} + b_{k1} a_{k2}).
//
// The k = 0 slot holds (f_{0,1}, f_{0,2}) where f_{0,2} is the k = 0
// instance of the generic first row (it reduces to alpha a0 + alpha Q1_0).
// The same code serves plain doubles (Newton world) and intervals (bound
// world); the scalar kind is a template parameter.

namespace wrightcont {

template <typename T>
T sin_of(const T& x) {
  using std::sin;
  return sin(x);
}

template <typename T>
T cos_of(const T& x) {
  using std::cos;
  return cos(x);
}

namespace detail {

// Tables of sin(jL), cos(jL) for j = 0..count-1, evaluated once per call
// site; evaluation order is fixed for determinism.
template <typename T>
struct trig_table {
  std::vector<T> sn, cs;
  trig_table(const T& L, int count) : sn(count), cs(count) {
    for (int j = 0; j < count; ++j) {
      T arg = T(static_cast<double>(j)) * L;
      sn[j] = sin_of(arg);
      cs[j] = cos_of(arg);
    }
  }
  // sin/cos at signed multiples of L.
  T s(int j) const { return j < 0 ? T(-sn[-j]) : sn[j]; }
  T c(int j) const { return j < 0 ? cs[-j] : cs[j]; }
};

}  // namespace detail

/// Row count of the truncated map with d modes.
inline std::size_t wright_rows(int d) { return 2 * static_cast<std::size_t>(d); }

/// Truncated map f^{(d)}(x, alpha). The point may have support below d; its
/// tail reads as zero. Entries stack as (f_{0,1}, f_{0,2}, f_{1,1}, ...).
template <typename T>
vec<T> eval_f(const galerkin_point<T>& x, const T& alpha, int d) {
  vec<T> out(wright_rows(d));
  const detail::trig_table<T> trig(x.L(), d);

  // Row (0,1): a0 + 2 sum a_k.
  T h = x.a0();
  for (int k = 1; k < x.m; ++k) h += T(2.0) * x.a(k);
  out[0] = h;

  for (int k = 0; k < d; ++k) {
    // Convolution over k1 with |k1| <= m-1 and |k-k1| <= m-1.
    T q1(0), q2(0);
    int lo = std::max(-(x.m - 1), k - (x.m - 1));
    int hi = std::min(x.m - 1, k + (x.m - 1));
    for (int k1 = lo; k1 <= hi; ++k1) {
      int k2 = k - k1;
      T aa_bb = x.sym_a(k1) * x.sym_a(k2) - x.sym_b(k1) * x.sym_b(k2);
      T ab_ba = x.sym_a(k1) * x.sym_b(k2) + x.sym_b(k1) * x.sym_a(k2);
      q1 += trig.c(k1) * aa_bb + trig.s(k1) * ab_ba;
      q2 += T(-1.0) * trig.s(k1) * aa_bb + trig.c(k1) * ab_ba;
    }
    T ak = x.sym_a(k), bk = x.sym_b(k);
    T kL = T(static_cast<double>(k)) * x.L();
    T row1 = alpha * trig.c(k) * ak + (T(-1.0) * kL + alpha * trig.s(k)) * bk +
             alpha * q1;
    if (k == 0) {
      out[1] = row1;  // f_{0,2}
    } else {
      out[2 * k] = row1;
      out[2 * k + 1] =
          (kL - alpha * trig.s(k)) * ak + alpha * trig.c(k) * bk + alpha * q2;
    }
  }
  return out;
}

/// Single component f_{k,i}; free k (returns exact zero once the
/// convolution support is exhausted, k >= 2m-1).
template <typename T>
T eval_f_component(int k, int i, const galerkin_point<T>& x, const T& alpha) {
  if (i != 1 && i != 2) throw domain_error("eval_f_component: i must be 1 or 2");
  if (k >= 2 * x.m - 1) return T(0);
  vec<T> rows = eval_f(x, alpha, k + 1);
  return i == 1 ? rows[2 * k] : rows[2 * k + 1];
}

namespace detail {

inline int col_a(int j) { return j == 0 ? 1 : 2 * j; }
inline int col_b(int j) { return 2 * j + 1; }  // only valid for j >= 1

}  // namespace detail

/// Jacobian of f^{(d)} with respect to (L, a0, a1, b1, ..., a_{d-1}, b_{d-1}),
/// evaluated at x (zero-padded to d modes) and alpha. 2d x 2d.
template <typename T>
mat<T> jacobian_f(const galerkin_point<T>& x, const T& alpha, int d) {
  const int n = 2 * d;
  mat<T> jac(n, n);
  const detail::trig_table<T> trig(x.L(), d);

  // Row (0,1): h = a0 + 2 sum a_k; derivative is constant.
  jac(0, 1) = T(1.0);
  for (int j = 1; j < d; ++j) jac(0, detail::col_a(j)) = T(2.0);

  for (int k = 0; k < d; ++k) {
    const int r1 = k == 0 ? 1 : 2 * k;       // row of f_{k,1}
    const int r2 = k == 0 ? -1 : 2 * k + 1;  // row of f_{k,2}; none at k=0
    T kk = T(static_cast<double>(k));
    T ak = x.sym_a(k), bk = x.sym_b(k);

    // Linear part, own-mode columns.
    jac(r1, detail::col_a(k)) += alpha * trig.c(k);
    if (k >= 1) {
      jac(r1, detail::col_b(k)) += T(-1.0) * kk * x.L() + alpha * trig.s(k);
      jac(r2, detail::col_a(k)) += kk * x.L() - alpha * trig.s(k);
      jac(r2, detail::col_b(k)) += alpha * trig.c(k);
    }
    // Linear part, L column (chain rule through kL and the trig factors).
    jac(r1, 0) += T(-1.0) * kk * alpha * trig.s(k) * ak +
                  (T(-1.0) * kk + kk * alpha * trig.c(k)) * bk;
    if (k >= 1)
      jac(r2, 0) += (kk - kk * alpha * trig.c(k)) * ak -
                    kk * alpha * trig.s(k) * bk;

    // Convolution part. The ranges span the full d-mode support: a column
    // for a zero-valued mode still receives the partner-value derivative.
    int lo = std::max(-(d - 1), k - (d - 1));
    int hi = std::min(d - 1, k + (d - 1));
    for (int k1 = lo; k1 <= hi; ++k1) {
      int k2 = k - k1;
      T a1v = x.sym_a(k1), b1v = x.sym_b(k1);
      T a2v = x.sym_a(k2), b2v = x.sym_b(k2);
      T c1 = trig.c(k1), s1 = trig.s(k1);
      T k1T = T(static_cast<double>(k1));

      auto add = [&](int row, int col, const T& val) {
        if (row >= 0 && col >= 0 && col < n) jac(row, col) += val;
      };

      int ca1 = std::abs(k1) < d ? detail::col_a(std::abs(k1)) : -1;
      int cb1 = (k1 != 0 && std::abs(k1) < d) ? detail::col_b(std::abs(k1)) : -1;
      int ca2 = std::abs(k2) < d ? detail::col_a(std::abs(k2)) : -1;
      int cb2 = (k2 != 0 && std::abs(k2) < d) ? detail::col_b(std::abs(k2)) : -1;
      T sg1 = T(k1 < 0 ? -1.0 : 1.0);
      T sg2 = T(k2 < 0 ? -1.0 : 1.0);

      // d/d a_{|k1|}, d/d a_{|k2|}, d/d b_{|k1|}, d/d b_{|k2|} for both rows.
      add(r1, ca1, alpha * (c1 * a2v + s1 * b2v));
      add(r1, ca2, alpha * (c1 * a1v + s1 * b1v));
      add(r1, cb1, sg1 * alpha * (T(-1.0) * c1 * b2v + s1 * a2v));
      add(r1, cb2, sg2 * alpha * (T(-1.0) * c1 * b1v + s1 * a1v));
      add(r2, ca1, alpha * (T(-1.0) * s1 * a2v + c1 * b2v));
      add(r2, ca2, alpha * (T(-1.0) * s1 * a1v + c1 * b1v));
      add(r2, cb1, sg1 * alpha * (s1 * b2v + c1 * a2v));
      add(r2, cb2, sg2 * alpha * (s1 * b1v + c1 * a1v));

      // d/dL through the trig factors.
      T aa_bb = a1v * a2v - b1v * b2v;
      T ab_ba = a1v * b2v + b1v * a2v;
      add(r1, 0, alpha * k1T * (T(-1.0) * s1 * aa_bb + c1 * ab_ba));
      add(r2, 0, alpha * k1T * (T(-1.0) * c1 * aa_bb - s1 * ab_ba));
    }
  }
  return jac;
}

/// Coefficient of alpha in f^{(d)}: the map is affine in alpha.
template <typename T>
vec<T> d_alpha_f(const galerkin_point<T>& x, int d) {
  vec<T> out(wright_rows(d));
  const detail::trig_table<T> trig(x.L(), d);
  for (int k = 0; k < d; ++k) {
    T q1(0), q2(0);
    int lo = std::max(-(x.m - 1), k - (x.m - 1));
    int hi = std::min(x.m - 1, k + (x.m - 1));
    for (int k1 = lo; k1 <= hi; ++k1) {
      int k2 = k - k1;
      T aa_bb = x.sym_a(k1) * x.sym_a(k2) - x.sym_b(k1) * x.sym_b(k2);
      T ab_ba = x.sym_a(k1) * x.sym_b(k2) + x.sym_b(k1) * x.sym_a(k2);
      q1 += trig.c(k1) * aa_bb + trig.s(k1) * ab_ba;
      q2 += T(-1.0) * trig.s(k1) * aa_bb + trig.c(k1) * ab_ba;
    }
    T ak = x.sym_a(k), bk = x.sym_b(k);
    T row1 = trig.c(k) * ak + trig.s(k) * bk + q1;
    if (k == 0) {
      out[1] = row1;  // row (0,1) is alpha-free
    } else {
      out[2 * k] = row1;
      out[2 * k + 1] = T(-1.0) * trig.s(k) * ak + trig.c(k) * bk + q2;
    }
  }
  return out;
}

/// First two Taylor coefficients of step -> f(xbar + step xdot, alpha0 + step)
/// over the extended range d = 2m-1:
///   d0 = f^{(d)}(xbar, alpha0)
///   d1 = D_x f^{(d)}(xbar, alpha0) xdot + d f^{(d)}/d alpha (xbar, alpha0).
struct residual_coeffs_result {
  ivec d0;
  ivec d1;
};

inline residual_coeffs_result residual_coeffs(const gpoint& xbar,
                                              const gpoint& xdot,
                                              const interval& alpha0) {
  if (xbar.m != xdot.m) throw shape_error("residual_coeffs: support mismatch");
  const int d = 2 * xbar.m - 1;
  igpoint xb = zero_padded(promote(xbar), d);
  igpoint xd = zero_padded(promote(xdot), d);
  residual_coeffs_result out;
  out.d0 = eval_f(xb, alpha0, d);
  imat jac = jacobian_f(xb, alpha0, d);
  ivec tangent(xd.entries.size());
  for (std::size_t i = 0; i < xd.entries.size(); ++i) tangent[i] = xd.entries[i];
  out.d1 = matvec(jac, tangent);
  ivec da = d_alpha_f(xb, d);
  for (std::size_t i = 0; i < out.d1.size(); ++i) out.d1[i] += da[i];
  return out;
}

}  // namespace wrightcont

#endif  // WRIGHTCONT_WRIGHT_MAP_HPP_
