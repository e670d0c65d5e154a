#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twospec/interlacing.hpp"
#include "twospec/kernel.hpp"
#include "twospec/linalg.hpp"
#include "twospec/oprl.hpp"
#include "twospec/popuc.hpp"

namespace twospec {

struct ToleranceProfile {
  std::string name;
  double tolerance;

  static ToleranceProfile strict() { return {"strict", 1e-10}; }
  static ToleranceProfile standard() { return {"standard", 1e-8}; }
};

/// Residuals certifying a reconstruction. In exact mode every residual is
/// computed in rational arithmetic and must vanish identically; in floating
/// mode residuals are scale-free and compared against the profile.
struct VerificationReport {
  Setting setting = Setting::Real;
  bool exact = false;
  ToleranceProfile profile = ToleranceProfile::standard();

  double kernel_residual = 0.0;           // max_k |(A w)_k|
  double kernel_residual_relative = 0.0;  // max_k |(A w)_k| / sum_j |A_kj w_j|
  /// max_i |c_i - t_i| / s_i where t is the target product and s the
  /// coefficients of the same product with every root replaced by -|root|.
  double poly_match_n = 0.0;
  double poly_match_m = 0.0;
  /// Real: |P_k(z)| relative to the absolute-coefficient bound at |z|.
  /// Circle: |det(z I - C)| / 2^k for C of order k.
  double spectrum_residual_n = 0.0;
  double spectrum_residual_m = 0.0;

  std::optional<double> min_gamma;         // real only
  std::optional<double> unitarity_defect_n;  // circle only, Frobenius |C C* - I|
  std::optional<double> unitarity_defect_m;
  std::optional<double> max_alpha_modulus;
  std::optional<double> boundary_defect;   // max ||b| - 1|

  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  bool passed() const { return failures.empty(); }
};

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Largest order accepted by the expansion oracle.
inline constexpr std::size_t kBruteExpansionLimit = 8;

template <class T>
std::vector<std::vector<T>> brute_nullspace(const Matrix<T>& a, double rel_tol = 1e-12) {
  return nullspace_basis(a, rel_tol);
}

namespace detail {

template <class T>
Polynomial<T> laplace_expand(const std::vector<std::vector<Polynomial<T>>>& m, std::size_t row,
                             std::vector<bool>& used) {
  const std::size_t k = m.size();
  if (row == k) return Polynomial<T>::constant(T(1));
  Polynomial<T> total = Polynomial<T>::constant(T(0));
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    if (used[c]) continue;
    used[c] = true;
    Polynomial<T> minor = laplace_expand(m, row + 1, used);
    used[c] = false;
    Polynomial<T> term = m[row][c] * minor;
    if (sign > 0)
      total += term;
    else
      total -= term;
    sign = -sign;
  }
  return total;
}

}  // namespace detail

/// det(x I_k - M_k) for the leading k x k block, by cofactor expansion.
template <class T>
Polynomial<T> brute_charpoly(const Matrix<T>& matrix, std::size_t k) {
  if (k > kBruteExpansionLimit)
    fail(ErrorCode::DimensionTooLarge, "expansion oracle is limited to order " + std::to_string(kBruteExpansionLimit));
  if (k > matrix.rows() || k > matrix.cols()) fail(ErrorCode::InvalidArgument, "order exceeds matrix size");
  std::vector<std::vector<Polynomial<T>>> entries(k, std::vector<Polynomial<T>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        entries[i][j] = Polynomial<T>(std::vector<T>{-matrix(i, j), T(1)});
      else
        entries[i][j] = Polynomial<T>::constant(-matrix(i, j));
    }
  std::vector<bool> used(k, false);
  return detail::laplace_expand(entries, 0, used);
}

/// det(point I - matrix).
template <class T>
Determinant<T> brute_det(const Matrix<T>& matrix, const T& point) {
  return determinant(shifted(matrix, point));
}

/// Relative distance of v from span(basis): |v - proj v| / |v| after
/// orthonormalizing the basis (floating scalars).
double subspace_residual(const std::vector<std::vector<Complex>>& basis, const std::vector<Complex>& v);

// ---------------------------------------------------------------------------
// Reconstruction checks

namespace detail {

/// Coefficients of prod_j (x + |r_j|): a bound for the coefficients of
/// prod_j (x - r_j) and for its values at |x|.
template <class T>
std::vector<double> absolute_product(std::span<const T> roots) {
  std::vector<double> c{1.0};
  for (const T& r : roots) {
    const double a = ScalarTraits<T>::magnitude(r);
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] + a * c[i];
    c[0] *= a;
  }
  return c;
}

inline double eval_absolute(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

template <class T>
double coefficient_deviation(const Polynomial<T>& p, const Polynomial<T>& target, const std::vector<double>& scale) {
  double worst = 0.0;
  const std::size_t len = std::max(p.coeffs().size(), target.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) {
    const T a = i < p.coeffs().size() ? p[i] : T(0);
    const T b = i < target.coeffs().size() ? target[i] : T(0);
    const double s = i < scale.size() && scale[i] > 0.0 ? scale[i] : 1.0;
    worst = std::max(worst, ScalarTraits<T>::magnitude(T(a - b)) / s);
  }
  return worst;
}

}  // namespace detail

template <class T>
VerificationReport verify_oprl(const RealSpectrumPair<T>& pair, std::span<const T> omega, const JacobiData<T>& data,
                               const ToleranceProfile& profile) {
  using Tr = ScalarTraits<T>;
  constexpr bool exact = is_exact_v<T>;
  VerificationReport rep;
  rep.setting = Setting::Real;
  rep.exact = exact;
  rep.profile = profile;
  const double tol = profile.tolerance;
  const std::size_t n = pair.n();
  const std::size_t m = pair.m();
  auto failure = [&](const std::string& what) { rep.failures.push_back(what); };

  if (omega.size() != n || data.order() != n || data.polys.size() != n + 1) {
    failure("dimensions of weights or recurrence data do not match n = " + std::to_string(n));
    return rep;
  }

  // (a) A w = 0
  const SystemMatrix<T> a = assemble_system_real(pair);
  bool kernel_exact_zero = true;
  for (std::size_t k = 0; k < a.entries.rows(); ++k) {
    T acc(0);
    double abs_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      T term = a.entries(k, j) * omega[j];
      abs_sum += Tr::magnitude(term);
      acc += term;
    }
    if (!Tr::is_zero(acc, 0.0)) kernel_exact_zero = false;
    const double r = Tr::magnitude(acc);
    rep.kernel_residual = std::max(rep.kernel_residual, r);
    rep.kernel_residual_relative = std::max(rep.kernel_residual_relative, abs_sum > 0.0 ? r / abs_sum : r);
  }
  if (exact ? !kernel_exact_zero : rep.kernel_residual_relative > tol)
    failure("weights do not solve the moment system");

  // (b) P_n and P_m against the target products
  const Polynomial<T> target_n = Polynomial<T>::from_roots(pair.xs);
  const Polynomial<T> target_m = Polynomial<T>::from_roots(pair.ys);
  const auto scale_n = detail::absolute_product<T>(pair.xs);
  const auto scale_m = detail::absolute_product<T>(pair.ys);
  rep.poly_match_n = detail::coefficient_deviation(data.polys[n], target_n, scale_n);
  rep.poly_match_m = detail::coefficient_deviation(data.polys[m], target_m, scale_m);
  if (exact ? !(data.polys[n] == target_n) : rep.poly_match_n > tol)
    failure("P_n differs from prod (x - x_j)");
  if (exact ? !(data.polys[m] == target_m) : rep.poly_match_m > tol)
    failure("P_m differs from prod (x - y_k)");

  // (c) charpoly of J_n vanishes on Z_n, of J_m on Z_m
  bool spectrum_exact = true;
  auto spectrum = [&](std::size_t order, const std::vector<T>& points, const std::vector<double>& scale) {
    double worst = 0.0;
    for (const T& x : points) {
      const T v = eval_charpoly(data, order, x);
      if (!Tr::is_zero(v, 0.0)) spectrum_exact = false;
      const double bound = detail::eval_absolute(scale, Tr::magnitude(x));
      worst = std::max(worst, Tr::magnitude(v) / (bound > 0.0 ? bound : 1.0));
    }
    return worst;
  };
  rep.spectrum_residual_n = spectrum(n, pair.xs, scale_n);
  rep.spectrum_residual_m = spectrum(m, pair.ys, scale_m);
  if (exact ? !spectrum_exact : std::max(rep.spectrum_residual_n, rep.spectrum_residual_m) > tol)
    failure("characteristic polynomial does not vanish on the prescribed spectra");

  // (d) gamma_k > 0
  bool positive = true;
  double min_gamma = n > 1 ? Tr::to_double(data.gamma[0]) : 0.0;
  for (const T& g : data.gamma) {
    if (!(Tr::sign(g) > 0)) positive = false;
    min_gamma = std::min(min_gamma, Tr::to_double(g));
  }
  if (n > 1) rep.min_gamma = min_gamma;
  if (!positive) failure("gamma_k is not positive for every k (positivity)");
  return rep;
}

/// Everything the circle pipeline produces and verify_popuc inspects.
struct PopucReconstruction {
  TrigMomentSequence moments;
  VerblunskyData verblunsky;
  Complex b_n;
  Complex b_m;
  Matrix<Complex> c_n;
  Matrix<Complex> c_m;
};

VerificationReport verify_popuc(const CircleSpectrumPair& pair, std::span<const double> omega,
                                const PopucReconstruction& rec, const ToleranceProfile& profile);

/// Frobenius norm of C C* - I.
double unitarity_defect(const Matrix<Complex>& c);

}  // namespace twospec
