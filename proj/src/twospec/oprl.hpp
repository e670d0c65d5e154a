#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "twospec/error.hpp"
#include "twospec/matrix.hpp"
#include "twospec/polynomial.hpp"
#include "twospec/scalar.hpp"

namespace twospec {

template <class T>
struct RealMomentSequence {
  std::vector<T> mu;  // mu_0, mu_1, ...
};

/// Monic three-term recurrence data of a discrete measure with n nodes:
/// P_{k+1}(x) = (x - beta_k) P_k(x) - gamma_k P_{k-1}(x).
template <class T>
struct JacobiData {
  std::vector<T> beta;   // beta_0 .. beta_{n-1}
  std::vector<T> gamma;  // gamma_1 .. gamma_{n-1}, stored at [k - 1]
  std::vector<Polynomial<T>> polys;  // P_0 .. P_n

  std::size_t order() const { return beta.size(); }
};

/// Float path aborts with ZERO_NORM when gamma_k <= kZeroNormRatio * (x_max - x_min)^2.
inline constexpr double kZeroNormRatio = 1e-13;

template <class T>
RealMomentSequence<T> moments_real(std::span<const T> xs, std::span<const T> omega, std::size_t count) {
  if (xs.size() != omega.size())
    fail(ErrorCode::LengthMismatch, "nodes and weights differ in length (" + std::to_string(xs.size()) + " vs " +
                                        std::to_string(omega.size()) + ")");
  RealMomentSequence<T> out;
  out.mu.assign(count, T(0));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    T term = omega[j];
    for (std::size_t k = 0; k < count; ++k) {
      out.mu[k] += term;
      term *= xs[j];
    }
  }
  return out;
}

namespace detail {

// Exact path: discrete Stieltjes procedure. The inner product
// <p, q> = sum_j omega_j p(x_j) q(x_j) is evaluated from the values of P_k at
// the nodes, which follow the same recurrence as the coefficients.
template <class T>
void stieltjes_values(std::span<const T> xs, std::span<const T> omega, std::vector<T>& beta, std::vector<T>& gamma) {
  const std::size_t n = xs.size();
  std::vector<T> prev(n, T(0));  // P_{k-1}(x_j)
  std::vector<T> cur(n, T(1));   // P_k(x_j)
  T h_prev(0);
  for (std::size_t k = 0; k < n; ++k) {
    T h(0);
    T xpp(0);
    for (std::size_t j = 0; j < n; ++j) {
      const T sq = omega[j] * cur[j] * cur[j];
      h += sq;
      xpp += xs[j] * sq;
    }
    if (ScalarTraits<T>::sign(h) <= 0)
      fail(ErrorCode::ZeroNorm, "<P_" + std::to_string(k) + ", P_" + std::to_string(k) +
                                    "> vanishes before degree n; nodes repeat or weights are not positive");
    beta.push_back(xpp / h);
    if (k > 0) gamma.push_back(h / h_prev);
    for (std::size_t j = 0; j < n; ++j) {
      T next = (xs[j] - beta.back()) * cur[j];
      if (k > 0) next -= gamma.back() * prev[j];
      prev[j] = std::move(cur[j]);
      cur[j] = std::move(next);
    }
    h_prev = h;
  }
}

// Float path: the Gragg-Harrod (RKPW) orthogonal update, which adds one node
// at a time with plane rotations. The value-based Stieltjes recursion loses
// all accuracy near degree n; this one stays backward stable.
inline void rkpw(std::span<const double> xs, std::span<const double> omega, std::vector<double>& beta,
                 std::vector<double>& gamma) {
  const std::size_t n = xs.size();
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(n, 0.0);
  b[0] = omega[0];
  for (std::size_t i = 1; i < n; ++i) {
    double pn = omega[i];
    double gam = 1.0;
    double sig = 0.0;
    double t = 0.0;
    const double lambda = xs[i];
    for (std::size_t k = 0; k <= i; ++k) {
      const double rho = b[k] + pn;
      const double tmp = gam * rho;
      double tsig = sig;
      if (rho <= 0.0) {
        gam = 1.0;
        sig = 0.0;
      } else {
        gam = b[k] / rho;
        sig = pn / rho;
      }
      const double tk = sig * (a[k] - lambda) - gam * t;
      a[k] -= tk - t;
      t = tk;
      pn = sig <= 0.0 ? tsig * b[k] : t * t / sig;
      b[k] = tmp;
    }
  }
  beta = std::move(a);
  gamma.assign(b.begin() + 1, b.end());
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  const double floor = kZeroNormRatio * (*hi - *lo) * (*hi - *lo);
  for (std::size_t k = 0; k < gamma.size(); ++k)
    if (!(gamma[k] > floor))
      fail(ErrorCode::ZeroNorm, "<P_" + std::to_string(k + 1) + ", P_" + std::to_string(k + 1) +
                                    "> is negligible before degree n; nodes nearly repeat");
}

}  // namespace detail

/// Monic recurrence of the measure sum_j omega_j delta_{x_j}, with P_0..P_n
/// assembled from (beta, gamma).
template <class T>
JacobiData<T> stieltjes(std::span<const T> xs, std::span<const T> omega) {
  using Tr = ScalarTraits<T>;
  const std::size_t n = xs.size();
  if (omega.size() != n) fail(ErrorCode::LengthMismatch, "nodes and weights differ in length");
  if (n == 0) fail(ErrorCode::InvalidDimensions, "Stieltjes procedure needs at least one node");
  for (std::size_t j = 0; j < n; ++j)
    if (!(Tr::sign(omega[j]) > 0))
      fail(ErrorCode::ZeroNorm, "weight " + std::to_string(j + 1) + " is not strictly positive");

  JacobiData<T> out;
  if constexpr (is_exact_v<T>) detail::stieltjes_values<T>(xs, omega, out.beta, out.gamma);
  else detail::rkpw(xs, omega, out.beta, out.gamma);

  out.polys.reserve(n + 1);
  out.polys.push_back(Polynomial<T>::constant(T(1)));
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial<T> next = out.polys[k].times_x() - out.beta[k] * out.polys[k];
    if (k > 0) next -= out.gamma[k - 1] * out.polys[k - 1];
    out.polys.push_back(std::move(next));
  }
  return out;
}

/// beta on the diagonal, ones above, gamma below.
template <class T>
Matrix<T> jacobi_matrix(const JacobiData<T>& data) {
  const std::size_t n = data.order();
  Matrix<T> j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = data.beta[i];
    if (i + 1 < n) {
      j(i, i + 1) = T(1);
      j(i + 1, i) = data.gamma[i];
    }
  }
  return j;
}

/// P_k(x) = det(x I_k - J_k), evaluated by running the recurrence at x.
template <class T>
T eval_charpoly(const JacobiData<T>& data, std::size_t k, const T& x) {
  if (k > data.order()) fail(ErrorCode::InvalidArgument, "order exceeds the Jacobi matrix size");
  T prev(0);
  T cur(1);
  for (std::size_t i = 0; i < k; ++i) {
    T next = (x - data.beta[i]) * cur;
    if (i > 0) next -= data.gamma[i - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace twospec
