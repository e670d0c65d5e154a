#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "twospec/matrix.hpp"
#include "twospec/scalar.hpp"

namespace twospec {

template <class T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

template <class T>
double max_magnitude(const Matrix<T>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, ScalarTraits<T>::magnitude(a(i, j)));
  return m;
}

/// Gauss-Jordan elimination. Exact scalars pivot on the first nonzero entry;
/// floating scalars use partial pivoting and treat entries below
/// rel_tol * max|a_ij| as zero.
template <class T>
Echelon<T> row_reduce(Matrix<T> a, double rel_tol = 1e-12) {
  using Tr = ScalarTraits<T>;
  const double zero_tol = rel_tol * max_magnitude(a);
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = a.rows();
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = row; r < a.rows(); ++r) {
        if (!Tr::is_zero(a(r, col), 0.0)) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = zero_tol;
      for (std::size_t r = row; r < a.rows(); ++r) {
        const double mag = Tr::magnitude(a(r, col));
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
    }
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    const T inv = T(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const T f = a(r, col);
      if (Tr::is_zero(f, 0.0)) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

/// Basis of {v : A v = 0} read off the reduced echelon form, one vector per
/// free column.
template <class T>
std::vector<std::vector<T>> nullspace_basis(const Matrix<T>& a, double rel_tol = 1e-12) {
  const Echelon<T> e = row_reduce(a, rel_tol);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
struct Determinant {
  T value{};
  /// Smallest pivot magnitude relative to max|a_ij| over all but the final
  /// elimination step (floating path only; the last pivot vanishes at an
  /// eigenvalue by construction).
  double min_leading_pivot = 1.0;
};

/// Determinant by fraction-free (Bareiss) elimination for exact scalars and
/// LU with partial pivoting for floating ones.
template <class T>
Determinant<T> determinant(Matrix<T> a) {
  using Tr = ScalarTraits<T>;
  const std::size_t n = a.rows();
  Determinant<T> out;
  if (n == 0) {
    out.value = T(1);
    return out;
  }
  if constexpr (is_exact_v<T>) {
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (Tr::is_zero(a(k, k), 0.0)) {
        std::size_t swap_row = n;
        for (std::size_t r = k + 1; r < n; ++r)
          if (!Tr::is_zero(a(r, k), 0.0)) {
            swap_row = r;
            break;
          }
        if (swap_row == n) {
          out.value = T(0);
          return out;
        }
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          T v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          a(i, j) = v / prev;
        }
      prev = a(k, k);
    }
    out.value = a(n - 1, n - 1);
    if (sign < 0) out.value = -out.value;
    return out;
  } else {
    const double scale = std::max(max_magnitude(a), 1e-300);
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = Tr::magnitude(a(k, k));
      for (std::size_t r = k + 1; r < n; ++r) {
        const double mag = Tr::magnitude(a(r, k));
        if (mag > best) {
          best = mag;
          p = r;
        }
      }
      if (k + 1 < n) out.min_leading_pivot = std::min(out.min_leading_pivot, best / scale);
      if (best == 0.0) {
        out.value = T(0);
        return out;
      }
      if (p != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
        det = -det;
      }
      det *= a(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const T f = a(i, k) / a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
    out.value = det;
    return out;
  }
}

/// point * I - a
template <class T>
Matrix<T> shifted(const Matrix<T>& a, const T& point) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (i == j ? point : T(0)) - a(i, j);
  return out;
}

}  // namespace twospec
