#include "twospec/verify.hpp"

namespace twospec {

double unitarity_defect(const Matrix<Complex>& c) {
  const std::size_t n = c.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) acc += c(i, k) * std::conj(c(j, k));
      if (i == j) acc -= 1.0;
      sum += std::norm(acc);
    }
  return std::sqrt(sum);
}

double subspace_residual(const std::vector<std::vector<Complex>>& basis, const std::vector<Complex>& v) {
  // Modified Gram-Schmidt with reorthogonalization; dependent vectors drop out.
  std::vector<std::vector<Complex>> q;
  auto dot = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
  };
  auto norm = [&](const std::vector<Complex>& a) { return std::sqrt(dot(a, a).real()); };
  for (const auto& b : basis) {
    std::vector<Complex> w = b;
    const double original = norm(w);
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : q) {
        const Complex p = dot(e, w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= p * e[i];
      }
    const double rest = norm(w);
    if (rest <= 1e-12 * original) continue;
    for (auto& x : w) x /= rest;
    q.push_back(std::move(w));
  }
  std::vector<Complex> r = v;
  const double vn = norm(r);
  if (vn == 0.0) return 0.0;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& e : q) {
      const Complex p = dot(e, r);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p * e[i];
    }
  return norm(r) / vn;
}

VerificationReport verify_popuc(const CircleSpectrumPair& pair, std::span<const double> omega,
                                const PopucReconstruction& rec, const ToleranceProfile& profile) {
  VerificationReport rep;
  rep.setting = Setting::Circle;
  rep.exact = false;
  rep.profile = profile;
  const double tol = profile.tolerance;
  const std::size_t n = pair.n();
  const std::size_t m = pair.m();
  auto failure = [&](const std::string& what) { rep.failures.push_back(what); };

  const auto& alpha = rec.verblunsky.alpha;
  if (omega.size() != n || alpha.size() + 1 != n || rec.c_n.rows() != n || rec.c_m.rows() != m) {
    failure("dimensions of weights, Verblunsky data or matrices do not match n = " + std::to_string(n));
    return rep;
  }

  // (a) A w = 0 with the complex system and real weights
  const SystemMatrix<Complex> a = assemble_system_circle(pair);
  for (std::size_t k = 0; k < a.entries.rows(); ++k) {
    Complex acc(0.0, 0.0);
    double abs_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex term = a.entries(k, j) * omega[j];
      abs_sum += std::abs(term);
      acc += term;
    }
    rep.kernel_residual = std::max(rep.kernel_residual, std::abs(acc));
    rep.kernel_residual_relative =
        std::max(rep.kernel_residual_relative, abs_sum > 0.0 ? std::abs(acc) / abs_sum : std::abs(acc));
  }
  if (rep.kernel_residual_relative > tol) failure("weights do not solve the moment system");

  // (e) |alpha_k| < 1, |b| = 1
  double max_alpha = 0.0;
  for (const Complex& x : alpha) max_alpha = std::max(max_alpha, std::abs(x));
  rep.max_alpha_modulus = max_alpha;
  if (!(max_alpha < 1.0)) failure("some |alpha_k| >= 1");
  rep.boundary_defect = std::max(std::fabs(std::abs(rec.b_n) - 1.0), std::fabs(std::abs(rec.b_m) - 1.0));
  if (*rep.boundary_defect > 1e-12) failure("boundary parameters are not unimodular");

  // (b) Psi_n, Psi_m rebuilt from (alpha, b) against the target products
  std::vector<double> binom_n(n + 1, 0.0), binom_m(m + 1, 0.0);
  {
    std::vector<double> unit_n(n, 1.0), unit_m(m, 1.0);
    binom_n = detail::absolute_product<double>(unit_n);
    binom_m = detail::absolute_product<double>(unit_m);
  }
  if (max_alpha < 1.0 - kDiskMargin) {
    const Polynomial<Complex> psi_n = szego_popuc(alpha, rec.b_n, n);
    const Polynomial<Complex> psi_m = szego_popuc(std::span(alpha).first(m - 1), rec.b_m, m);
    rep.poly_match_n = detail::coefficient_deviation(psi_n, Polynomial<Complex>::from_roots(pair.zetas), binom_n);
    rep.poly_match_m = detail::coefficient_deviation(psi_m, Polynomial<Complex>::from_roots(pair.xis), binom_m);
    if (rep.poly_match_n > tol) failure("Psi_n differs from prod (z - zeta_j)");
    if (rep.poly_match_m > tol) failure("Psi_m differs from prod (z - xi_k)");
  }

  // (c) det(z I - C) on the prescribed points
  bool weak_pivot = false;
  // Scaled by 2^k, the bound on |det(z I - C)| for unimodular z and spectrum.
  auto spectrum = [&](const Matrix<Complex>& c, const std::vector<Complex>& points) {
    double worst = 0.0;
    for (const Complex& z : points) {
      const Determinant<Complex> d = brute_det(c, z);
      if (d.min_leading_pivot < 1e-12) weak_pivot = true;
      worst = std::max(worst, std::abs(d.value));
    }
    return std::ldexp(worst, -static_cast<int>(c.rows()));
  };
  rep.spectrum_residual_n = spectrum(rec.c_n, pair.zetas);
  rep.spectrum_residual_m = spectrum(rec.c_m, pair.xis);
  if (rep.spectrum_residual_n > tol || rep.spectrum_residual_m > tol)
    failure("characteristic polynomial of C does not vanish on the prescribed spectra");
  if (weak_pivot) rep.warnings.push_back("LU pivot below 1e-12 while evaluating det(z I - C); residual may be unreliable");

  // (d) unitarity
  rep.unitarity_defect_n = unitarity_defect(rec.c_n);
  rep.unitarity_defect_m = unitarity_defect(rec.c_m);
  if (std::max(*rep.unitarity_defect_n, *rep.unitarity_defect_m) > tol) failure("C is not unitary");
  return rep;
}

}  // namespace twospec
