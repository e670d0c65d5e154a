#include "twospec/popuc.hpp"

#include <cmath>
#include <string>

#include "twospec/error.hpp"

namespace twospec {

namespace {

void check_alpha(const Complex& a, std::size_t k) {
  if (!(std::abs(a) < 1.0 - kDiskMargin))
    fail(ErrorCode::AlphaOutOfDisk, "|alpha_" + std::to_string(k) + "| = " + format_double(std::abs(a)) +
                                        " is not inside the unit disk");
}

// One Szego step: Phi_{k+1} = z Phi_k - conj(a) Phi*_k, Phi*_{k+1} = Phi*_k - a z Phi_k.
void szego_step(Polynomial<Complex>& phi, Polynomial<Complex>& phi_star, const Complex& a) {
  Polynomial<Complex> z_phi = phi.times_x();
  Polynomial<Complex> next = z_phi - std::conj(a) * phi_star;
  Polynomial<Complex> next_star = phi_star - a * z_phi;
  phi = std::move(next);
  phi_star = std::move(next_star);
}

}  // namespace

TrigMomentSequence trig_moments(std::span<const Complex> zetas, std::span<const double> omega) {
  if (zetas.size() != omega.size())
    fail(ErrorCode::LengthMismatch, "nodes and weights differ in length (" + std::to_string(zetas.size()) + " vs " +
                                        std::to_string(omega.size()) + ")");
  TrigMomentSequence out;
  out.nonnegative.assign(zetas.size(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < zetas.size(); ++j) {
    Complex term(omega[j], 0.0);
    for (auto& mu : out.nonnegative) {
      mu += term;
      term *= zetas[j];
    }
  }
  // mu_0 is the total mass and real by construction.
  if (!out.nonnegative.empty()) out.nonnegative[0] = Complex(out.nonnegative[0].real(), 0.0);
  return out;
}

Polynomial<Complex> reversed(const Polynomial<Complex>& p) {
  const auto& c = p.coeffs();
  std::vector<Complex> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = std::conj(c[c.size() - 1 - i]);
  return Polynomial<Complex>(std::move(r));
}

VerblunskyData verblunsky_from_moments(const TrigMomentSequence& mu, std::size_t count) {
  if (count == 0) fail(ErrorCode::InvalidDimensions, "need at least one node");
  if (mu.max_index() < static_cast<long>(count) - 1)
    fail(ErrorCode::LengthMismatch, "not enough moments for " + std::to_string(count) + " nodes");
  const double mass = mu(0).real();
  if (!(mass > 0.0)) fail(ErrorCode::ZeroDenominator, "mu_0 must be positive");

  auto functional = [&](const Polynomial<Complex>& p) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) acc += p[i] * mu(static_cast<long>(i));
    return acc;
  };

  VerblunskyData out;
  Polynomial<Complex> phi = Polynomial<Complex>::constant(Complex(1.0, 0.0));
  Polynomial<Complex> phi_star = phi;
  out.phis.push_back(phi);
  out.phi_stars.push_back(phi_star);
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const Complex denom = functional(phi_star);
    if (!(std::abs(denom) > 1e-300) || std::abs(denom) <= 1e-15 * mass)
      fail(ErrorCode::ZeroDenominator, "L(Phi*_" + std::to_string(k) + ") vanishes; too few support points");
    const Complex alpha = std::conj(functional(phi.times_x()) / denom);
    check_alpha(alpha, k);
    out.alpha.push_back(alpha);
    out.rho.push_back(std::sqrt(1.0 - std::norm(alpha)));
    szego_step(phi, phi_star, alpha);
    out.phis.push_back(phi);
    out.phi_stars.push_back(phi_star);
  }
  return out;
}

VerblunskyData verblunsky_from_measure(std::span<const Complex> zetas, std::span<const double> omega) {
  const std::size_t n = zetas.size();
  if (omega.size() != n)
    fail(ErrorCode::LengthMismatch, "nodes and weights differ in length (" + std::to_string(n) + " vs " +
                                        std::to_string(omega.size()) + ")");
  if (n == 0) fail(ErrorCode::InvalidDimensions, "need at least one node");
  double mass = 0.0;
  for (double w : omega) mass += w;
  if (!(mass > 0.0)) fail(ErrorCode::ZeroDenominator, "total mass must be positive");

  using Values = std::vector<Complex>;
  auto inner = [&](const Values& f, const Values& g) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += omega[j] * f[j] * std::conj(g[j]);
    return acc;
  };
  // Orthonormal values of Phi_0 .. Phi_k; multiplied by zeta they span z Phi_0 .. z Phi_k.
  std::vector<Values> basis;
  auto append_basis = [&](Values v) {
    const double norm = std::sqrt(inner(v, v).real());
    for (auto& x : v) x /= norm;
    basis.push_back(std::move(v));
  };
  auto project_out = [&](Values& v, bool shifted) {
    for (const Values& e : basis) {
      Values u = e;
      if (shifted)
        for (std::size_t j = 0; j < n; ++j) u[j] *= zetas[j];
      const Complex c = inner(v, u);
      for (std::size_t j = 0; j < n; ++j) v[j] -= c * u[j];
    }
  };

  VerblunskyData out;
  Polynomial<Complex> phi = Polynomial<Complex>::constant(Complex(1.0, 0.0));
  Polynomial<Complex> phi_star = phi;
  out.phis.push_back(phi);
  out.phi_stars.push_back(phi_star);
  Values v(n, Complex(1.0, 0.0));  // Phi_k(zeta_j)
  Values v_star = v;               // Phi*_k(zeta_j)
  append_basis(v);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Complex num(0.0, 0.0);
    Complex denom(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      num += omega[j] * zetas[j] * v[j];
      denom += omega[j] * v_star[j];
    }
    // |L(Phi*_k)| = |Phi_k|^2 decays with prod rho_i^2, so only an exact zero is
    // degenerate here; loss of support shows up as |alpha| -> 1 instead.
    if (!(std::abs(denom) > 0.0) || !std::isfinite(std::abs(denom)))
      fail(ErrorCode::ZeroDenominator, "L(Phi*_" + std::to_string(k) + ") vanishes; too few support points");
    const Complex alpha = std::conj(num / denom);
    check_alpha(alpha, k);
    out.alpha.push_back(alpha);
    out.rho.push_back(std::sqrt(1.0 - std::norm(alpha)));
    szego_step(phi, phi_star, alpha);
    out.phis.push_back(phi);
    out.phi_stars.push_back(phi_star);

    for (std::size_t j = 0; j < n; ++j) {
      const Complex zv = zetas[j] * v[j];
      v[j] = zv - std::conj(alpha) * v_star[j];
      v_star[j] -= alpha * zv;
    }
    // Phi_{k+1} is orthogonal to Phi_0..Phi_k and Phi*_{k+1} to z Phi_0..z Phi_k;
    // restoring both keeps later coefficients accurate for spread-out weights.
    for (int pass = 0; pass < 2; ++pass) {
      project_out(v, false);
      project_out(v_star, true);
    }
    // The recurrence is linear in (Phi_k, Phi*_k), so a common rescaling keeps
    // alpha unchanged and the values away from underflow.
    const double norm = std::sqrt(inner(v, v).real());
    if (!(norm > 0.0)) fail(ErrorCode::ZeroDenominator, "Phi_" + std::to_string(k + 1) + " vanishes on the support");
    for (std::size_t j = 0; j < n; ++j) {
      v[j] /= norm;
      v_star[j] /= norm;
    }
    append_basis(v);
  }
  return out;
}

Complex boundary_param(std::span<const Complex> zeros) {
  Complex psi0(1.0, 0.0);
  for (const Complex& z : zeros) psi0 *= -z;
  return -std::conj(psi0);
}

namespace {

void check_boundary(const Complex& b) {
  if (std::fabs(std::abs(b) - 1.0) > 1e-10)
    fail(ErrorCode::NotUnitModulus, "boundary parameter b is not unimodular");
}

}  // namespace

Polynomial<Complex> szego_popuc(std::span<const Complex> alpha, Complex b, std::size_t degree) {
  check_boundary(b);
  if (degree == 0) fail(ErrorCode::InvalidArgument, "paraorthogonal degree must be positive");
  if (alpha.size() + 1 < degree)
    fail(ErrorCode::InvalidArgument, "degree " + std::to_string(degree) + " needs " + std::to_string(degree - 1) +
                                         " Verblunsky coefficients");
  Polynomial<Complex> phi = Polynomial<Complex>::constant(Complex(1.0, 0.0));
  Polynomial<Complex> phi_star = phi;
  for (std::size_t k = 0; k + 1 < degree; ++k) {
    check_alpha(alpha[k], k);
    szego_step(phi, phi_star, alpha[k]);
  }
  return phi.times_x() - std::conj(b) * phi_star;
}

Matrix<Complex> cmv_matrix(std::span<const Complex> alpha, Complex b) {
  check_boundary(b);
  const std::size_t n = alpha.size() + 1;
  std::vector<Complex> a(alpha.begin(), alpha.end());
  a.push_back(b);
  std::vector<double> rho(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    check_alpha(a[k], k);
    rho[k] = std::sqrt(1.0 - std::norm(a[k]));
  }

  // Theta_k occupies rows/columns k, k+1, truncated to 1 x 1 at the end.
  auto place = [&](Matrix<Complex>& target, std::size_t k) {
    target(k, k) = std::conj(a[k]);
    if (k + 1 < n) {
      target(k, k + 1) = rho[k];
      target(k + 1, k) = rho[k];
      target(k + 1, k + 1) = -a[k];
    }
  };
  Matrix<Complex> l(n, n);
  Matrix<Complex> m(n, n);
  m(0, 0) = Complex(1.0, 0.0);
  for (std::size_t k = 0; k < n; k += 2) place(l, k);
  for (std::size_t k = 1; k < n; k += 2) place(m, k);
  return l * m;
}

}  // namespace twospec
