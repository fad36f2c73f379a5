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

#ifndef WRIGHTCONT_LINALG_HPP_
#define WRIGHTCONT_LINALG_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "wrightcont/errors.hpp"
#include "wrightcont/interval.hpp"

// Dense vectors and matrices, generic over the scalar kind. The sizes in
// this project stay in the dozens, so a plain row-major layout and an
// unblocked LU are all that is needed.

namespace wrightcont {

template <typename T>
class vec {
 public:
  vec() = default;
  explicit vec(std::size_t n) : data_(n, T(0)) {}
  vec(std::size_t n, const T& fill) : data_(n, fill) {}

  std::size_t size() const { return data_.size(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  std::vector<T> data_;
};

template <typename T>
class mat {
 public:
  mat() : rows_(0), cols_(0) {}
  mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  static mat identity(std::size_t n) {
    mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using dvec = vec<double>;
using dmat = mat<double>;
using ivec = vec<interval>;
using imat = mat<interval>;

template <typename T, typename U>
auto matvec(const mat<T>& m, const vec<U>& v) {
  if (m.cols() != v.size()) throw shape_error("matvec: dimension mismatch");
  using R = decltype(m(0, 0) * v[0]);
  vec<R> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    R acc = R(0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

template <typename T, typename U>
auto matmul(const mat<T>& a, const mat<U>& b) {
  if (a.cols() != b.rows()) throw shape_error("matmul: dimension mismatch");
  using R = decltype(a(0, 0) * b(0, 0));
  mat<R> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

/// Enclosure of the max-absolute-row-sum norm of an interval matrix.
inline interval inf_norm(const imat& m) {
  interval best(0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    interval row_sum(0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) row_sum += iabs(m(i, j));
    best = imax(best, row_sum);
  }
  return best;
}

inline double inf_norm(const dvec& v) {
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::max(best, std::fabs(v[i]));
  return best;
}

/// Componentwise interval promotion of a point vector/matrix.
inline ivec promote(const dvec& v) {
  ivec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = interval(v[i]);
  return out;
}

inline imat promote(const dmat& m) {
  imat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = interval(m(i, j));
  return out;
}

/// Componentwise absolute value of a point matrix.
inline dmat abs(const dmat& m) {
  dmat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = std::fabs(m(i, j));
  return out;
}

/// LU factorization with partial pivoting, for the plain floating point
/// (Newton) world.
class lu_factor {
 public:
  explicit lu_factor(dmat a) : lu_(std::move(a)), piv_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw shape_error("lu_factor: matrix not square");
    for (std::size_t i = 0; i < n; ++i) piv_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::fabs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        double cand = std::fabs(lu_(i, k));
        if (cand > best) {
          best = cand;
          p = i;
        }
      }
      if (!(best > 0.0) || !std::isfinite(best))
        throw numerical_error("lu_factor: singular or non-finite pivot");
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(piv_[k], piv_[p]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        double lik = lu_(i, k);
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= lik * lu_(k, j);
      }
    }
  }

  dvec solve(const dvec& b) const {
    const std::size_t n = lu_.rows();
    if (b.size() != n) throw shape_error("lu_factor::solve: size mismatch");
    dvec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[piv_[i]];
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

  dmat inverse() const {
    const std::size_t n = lu_.rows();
    dmat inv(n, n);
    dvec e(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) e[i] = (i == j) ? 1.0 : 0.0;
      dvec col = solve(e);
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
  }

 private:
  dmat lu_;
  std::vector<std::size_t> piv_;
};

/// Enclosure of the solution of a 2x2 interval system [[t, d], [-d, t]] x = b
/// via the closed-form inverse; throws when the determinant encloses zero.
inline ivec solve_rot2(const interval& t, const interval& d, const ivec& b) {
  if (b.size() != 2) throw shape_error("solve_rot2: rhs must have size 2");
  interval det = sqr(t) + sqr(d);
  if (det.contains_zero())
    throw certificate_error("solve_rot2: block determinant encloses zero");
  ivec out(2);
  out[0] = (t * b[0] - d * b[1]) / det;
  out[1] = (d * b[0] + t * b[1]) / det;
  return out;
}

}  // namespace wrightcont

#endif  // WRIGHTCONT_LINALG_HPP_
