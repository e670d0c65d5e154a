#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "twospec/fuzz.hpp"
#include "twospec/kernel.hpp"
#include "twospec/popuc.hpp"
#include "twospec/verify.hpp"

using namespace twospec;
using th::near;

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS6 = std::sqrt(6.0);

// Three-node circle case with s1 = 1: the sum of both admissible circuits.
std::vector<double> circle_weights() {
  const double a = 2 * (kS6 - kS2);
  const double b = 4.0 / 3.0 * (3 * kS2 - kS6);
  return {2 * a, b, b};
}

}  // namespace

TEST_CASE("trigonometric moments") {
  const auto p = th::circle_three();
  const auto mu = trig_moments(p.zetas, circle_weights());
  CHECK(near(mu(0), 4 * kS2 + 4 * kS6 / 3, 1e-12));
  CHECK(near(mu(1), 0.0, 1e-12));
  CHECK(near(mu(2), -8 * kS6 / 3, 1e-12));
  CHECK(mu(-2) == std::conj(mu(2)));
  CHECK(mu(0).imag() == 0.0);

  const std::vector<Complex> one{Complex(1.0, 0.0)};
  const auto unit = trig_moments(one, std::vector<double>{1.0});
  CHECK(unit(0) == Complex(1.0, 0.0));

  const std::vector<Complex> pair{std::polar(1.0, 0.7), std::polar(1.0, -0.7), Complex(-1.0, 0.0)};
  const auto sym = trig_moments(pair, std::vector<double>{0.3, 0.3, 1.1});
  for (long k = 0; k <= sym.max_index(); ++k) CHECK(std::fabs(sym(k).imag()) < 1e-15);

  CHECK(th::code_of([&] { trig_moments(pair, std::vector<double>{1.0}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("Verblunsky coefficients of the three-node circle case") {
  const auto p = th::circle_three();
  const auto v = verblunsky_from_moments(trig_moments(p.zetas, circle_weights()), 3);
  REQUIRE(v.alpha.size() == 2);
  CHECK(near(v.alpha[0], 0.0, 1e-12));
  CHECK(near(v.alpha[1], 1.0 - kS3, 1e-12));
  CHECK(v.rho[1] == doctest::Approx(std::sqrt(2 * kS3 - 3)).epsilon(1e-12));
  // alpha_k = -conj(Phi_{k+1}(0))
  for (std::size_t k = 0; k < 2; ++k) CHECK(near(v.alpha[k], -std::conj(v.phis[k + 1][0]), 1e-12));

  const std::vector<Complex> two{Complex(1.0, 0.0), Complex(-1.0, 0.0)};
  const auto sym = verblunsky_from_moments(trig_moments(two, std::vector<double>{1.0, 1.0}), 2);
  CHECK(near(sym.alpha[0], 0.0, 1e-15));
}

TEST_CASE("Verblunsky recovery errors") {
  TrigMomentSequence zero_mass{{Complex(0.0, 0.0), Complex(0.0, 0.0)}};
  CHECK(th::code_of([&] { verblunsky_from_moments(zero_mass, 2); }) == ErrorCode::ZeroDenominator);
  // One support point cannot carry two nodes.
  TrigMomentSequence point{{Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0)}};
  const auto code = th::code_of([&] { verblunsky_from_moments(point, 3); });
  CHECK((code == ErrorCode::AlphaOutOfDisk || code == ErrorCode::ZeroDenominator));
  CHECK(th::code_of([&] { verblunsky_from_moments(point, 5); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("boundary parameters") {
  const auto p = th::circle_three();
  CHECK(near(boundary_param(p.zetas), Complex(0.0, 1.0), 1e-12));
  CHECK(near(boundary_param(p.xis), Complex(1.0, 0.0), 1e-12));
  const Complex z = std::polar(1.0, 0.4);
  CHECK(near(boundary_param(std::vector<Complex>{z}), std::conj(z), 1e-15));
}

TEST_CASE("paraorthogonal polynomials") {
  const Complex b = std::polar(1.0, 1.3);
  const auto psi1 = szego_popuc(std::vector<Complex>{}, b, 1);
  CHECK(psi1.degree() == 1);
  CHECK(near(psi1[0], -std::conj(b), 1e-15));
  CHECK(psi1[1] == Complex(1.0, 0.0));

  const auto p = th::circle_three();
  const std::vector<Complex> alpha{Complex(0.0, 0.0), Complex(1.0 - kS3, 0.0)};
  const auto psi3 = szego_popuc(alpha, Complex(0.0, 1.0), 3);
  const auto target3 = Polynomial<Complex>::from_roots(p.zetas);
  for (std::size_t i = 0; i <= 3; ++i) CHECK(near(psi3[i], target3[i], 1e-10));

  const auto psi2 = szego_popuc(alpha, Complex(1.0, 0.0), 2);
  CHECK(near(psi2[0], -1.0, 1e-15));
  CHECK(near(psi2[1], 0.0, 1e-15));
  CHECK(near(psi2[2], 1.0, 1e-15));

  CHECK(th::code_of([&] { szego_popuc(alpha, Complex(2.0, 0.0), 2); }) == ErrorCode::NotUnitModulus);
  CHECK(th::code_of([&] { szego_popuc(std::vector<Complex>{Complex(1.0, 0.0)}, b, 2); }) == ErrorCode::AlphaOutOfDisk);
}

TEST_CASE("CMV matrices of the three-node circle case") {
  const auto c2 = cmv_matrix(std::vector<Complex>{Complex(0.0, 0.0)}, Complex(1.0, 0.0));
  CHECK(near(c2(0, 0), 0.0, 1e-15));
  CHECK(near(c2(0, 1), 1.0, 1e-15));
  CHECK(near(c2(1, 0), 1.0, 1e-15));
  CHECK(near(c2(1, 1), 0.0, 1e-15));

  const double rho = std::sqrt(2 * kS3 - 3);
  const Complex i(0.0, 1.0);
  const auto c3 = cmv_matrix(std::vector<Complex>{Complex(0.0, 0.0), Complex(1.0 - kS3, 0.0)}, i);
  const Complex expected[3][3] = {{0.0, 1.0 - kS3, rho}, {1.0, 0.0, 0.0}, {0.0, -i * rho, i * (1.0 - kS3)}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(near(c3(r, c), expected[r][c], 1e-12));
  CHECK(unitarity_defect(c3) < 1e-12);

  const Complex b = std::polar(1.0, 2.1);
  const auto c1 = cmv_matrix(std::vector<Complex>{}, b);
  CHECK(near(c1(0, 0), std::conj(b), 1e-15));
}

TEST_CASE("random CMV matrices are unitary and pentadiagonal") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> r(0.0, 0.95), t(0.0, kTwoPi);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<Complex> alpha;
    for (std::size_t k = 0; k + 1 < n; ++k) alpha.push_back(std::polar(r(rng), t(rng)));
    const Complex b = std::polar(1.0, t(rng));
    const auto c = cmv_matrix(alpha, b);
    CHECK(unitarity_defect(c) < 1e-12);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i > j + 2 || j > i + 2) CHECK(c(i, j) == Complex(0.0, 0.0));
    // Psi_n has unimodular zeros, so its constant term is unimodular too.
    const auto psi = szego_popuc(alpha, b, n);
    CHECK(std::fabs(std::abs(psi[0]) - 1.0) < 1e-10);
  }
}

TEST_CASE("Verblunsky coefficients are invariant under weight scaling") {
  std::mt19937_64 rng(29);
  const RawCirclePair raw = random_circle_pair(rng, 6, 2);
  const auto p = normalize_circle(raw.zetas, raw.xis);
  const AdmissibleFamily fam(bands_circle(p));
  const auto w = positive_weight<double>(fam, 6, {}, [&](const auto& s) { return circuit_circle(p, s); }).omega;
  std::vector<double> w2 = w;
  for (auto& v : w2) v *= 37.5;
  const auto a = verblunsky_from_moments(trig_moments(p.zetas, w), 6);
  const auto b = verblunsky_from_moments(trig_moments(p.zetas, w2), 6);
  for (std::size_t k = 0; k < a.alpha.size(); ++k) {
    CHECK(near(a.alpha[k], b.alpha[k], 1e-12));
    CHECK(std::abs(a.alpha[k]) < 1.0);
  }
}

TEST_CASE("node-value recovery agrees with the moment functional") {
  const auto p = th::circle_three();
  const auto v = verblunsky_from_measure(p.zetas, circle_weights());
  REQUIRE(v.alpha.size() == 2);
  CHECK(near(v.alpha[0], 0.0, 1e-12));
  CHECK(near(v.alpha[1], 1.0 - kS3, 1e-12));
  CHECK(near(v.phis[2][0], -std::conj(v.alpha[1]), 1e-12));

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto raw = random_circle_pair(rng, 7, 3);
    const auto q = normalize_circle(raw.zetas, raw.xis);
    std::vector<double> w(7);
    for (auto& x : w) x = u(rng);
    const auto a = verblunsky_from_measure(q.zetas, w);
    const auto b = verblunsky_from_moments(trig_moments(q.zetas, w), 7);
    for (std::size_t k = 0; k < 6; ++k) CHECK(near(a.alpha[k], b.alpha[k], 1e-9));
  }
  CHECK(th::code_of([&] { verblunsky_from_measure(p.zetas, std::vector<double>{1.0}); }) == ErrorCode::LengthMismatch);
}
