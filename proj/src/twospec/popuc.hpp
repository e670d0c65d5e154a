#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twospec/matrix.hpp"
#include "twospec/polynomial.hpp"
#include "twospec/scalar.hpp"

namespace twospec {

/// mu_k = sum_j omega_j zeta_j^k for |k| <= n - 1. Only k >= 0 is stored;
/// negative indices come from mu_{-k} = conj(mu_k).
struct TrigMomentSequence {
  std::vector<Complex> nonnegative;  // mu_0 .. mu_{n-1}

  Complex operator()(long k) const {
    return k >= 0 ? nonnegative.at(static_cast<std::size_t>(k)) : std::conj(nonnegative.at(static_cast<std::size_t>(-k)));
  }
  long max_index() const { return static_cast<long>(nonnegative.size()) - 1; }
};

struct VerblunskyData {
  std::vector<Complex> alpha;  // alpha_0 .. alpha_{n-2}
  std::vector<double> rho;     // sqrt(1 - |alpha_k|^2)
  std::vector<Polynomial<Complex>> phis;      // Phi_0 .. Phi_{n-1}
  std::vector<Polynomial<Complex>> phi_stars; // Phi*_0 .. Phi*_{n-1}
};

/// |alpha| within this distance of 1 is rejected rather than clamped.
inline constexpr double kDiskMargin = 1e-12;

TrigMomentSequence trig_moments(std::span<const Complex> zetas, std::span<const double> omega);

/// Recovers alpha_0 .. alpha_{count-2} from the moment functional
/// L(z^i) = mu_i: conj(alpha_k) = L(z Phi_k) / L(Phi*_k), then one Szego step.
VerblunskyData verblunsky_from_moments(const TrigMomentSequence& mu, std::size_t count);

/// Same coefficients for the measure sum_j omega_j delta_{zeta_j}, computed
/// from the values of Phi_k at the nodes with reorthogonalization. Stays
/// accurate when the weights span many orders of magnitude.
VerblunskyData verblunsky_from_measure(std::span<const Complex> zetas, std::span<const double> omega);

/// Phi*_k for a degree-k polynomial: reversed, conjugated coefficients.
Polynomial<Complex> reversed(const Polynomial<Complex>& p);

/// b = -conj(Psi(0)) for Psi(z) = prod_j (z - zeta_j).
Complex boundary_param(std::span<const Complex> zeros);

/// Psi_l(z) = z Phi_{l-1}(z) - conj(b) Phi*_{l-1}(z), with Phi_{l-1} built
/// from alpha_0 .. alpha_{l-2} by the Szego recurrence.
Polynomial<Complex> szego_popuc(std::span<const Complex> alpha, Complex b, std::size_t degree);

/// Unitary pentadiagonal C(alpha_0, ..., alpha_{n-2}, b) = L M with
/// Theta_k = [[conj a_k, rho_k], [rho_k, -a_k]], L = Theta_0 + Theta_2 + ...,
/// M = [1] + Theta_1 + Theta_3 + ..., where the last parameter a_{n-1} = b
/// contributes the 1 x 1 block [conj b].
Matrix<Complex> cmv_matrix(std::span<const Complex> alpha, Complex b);

}  // namespace twospec
