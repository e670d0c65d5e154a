#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "twospec/fuzz.hpp"
#include "twospec/pipeline.hpp"
#include "twospec/verify.hpp"

using namespace twospec;
using th::q;
using th::qs;

TEST_CASE("verify_oprl: the four-node case is exact") {
  const auto p = th::qpair({"1", "2", "3", "4"}, {"3/2", "7/2"});
  const auto r = reconstruct_real<Rational>(p, {}, ToleranceProfile::strict());
  CHECK(r.report.passed());
  CHECK(r.report.exact);
  CHECK(r.report.kernel_residual == 0.0);
  CHECK(r.report.poly_match_n == 0.0);
  CHECK(r.report.poly_match_m == 0.0);
  CHECK(r.report.spectrum_residual_n == 0.0);
  CHECK(r.report.spectrum_residual_m == 0.0);
  CHECK(*r.report.min_gamma > 0.0);
}

TEST_CASE("verify_oprl: a negated gamma fails positivity") {
  const auto p = th::qpair({"1", "2", "3", "4"}, {"3/2", "7/2"});
  auto r = reconstruct_real<Rational>(p, {}, ToleranceProfile::strict());
  r.jacobi.gamma[1] = -r.jacobi.gamma[1];
  const auto rep = verify_oprl<Rational>(p, r.weights.omega, r.jacobi, ToleranceProfile::strict());
  CHECK_FALSE(rep.passed());
  bool flagged = false;
  for (const auto& f : rep.failures) flagged = flagged || f.find("positiv") != std::string::npos;
  CHECK(flagged);
  CHECK(*rep.min_gamma < 0.0);
}

TEST_CASE("verify_oprl: wrong weights are caught") {
  const auto p = th::qpair({"1", "2", "3", "4"}, {"3/2", "7/2"});
  const auto w = qs({"1", "1", "1", "1"});
  const auto d = stieltjes<Rational>(p.xs, w);
  const auto rep = verify_oprl<Rational>(p, w, d, ToleranceProfile::strict());
  CHECK_FALSE(rep.passed());
  CHECK(rep.kernel_residual > 0.0);
  CHECK(rep.poly_match_m > 0.0);
}

TEST_CASE("verify_oprl: random float instance n = 8, m = 3") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_real_pair(rng, 8, 3);
    const auto r = reconstruct_real<double>(p, {}, ToleranceProfile{"1e-9", 1e-9});
    CHECK(r.report.passed());
    CHECK(r.report.kernel_residual_relative <= 1e-9);
    CHECK(r.report.poly_match_n <= 1e-9);
    CHECK(r.report.poly_match_m <= 1e-9);
  }
}

TEST_CASE("verify_popuc: the three-node circle case at the strict profile") {
  const auto r = reconstruct_circle(th::circle_three(), {}, ToleranceProfile::strict());
  CHECK(r.report.passed());
  CHECK(r.report.kernel_residual <= 1e-10);
  CHECK(r.report.poly_match_n <= 1e-10);
  CHECK(r.report.poly_match_m <= 1e-10);
  CHECK(r.report.spectrum_residual_n <= 1e-10);
  CHECK(r.report.spectrum_residual_m <= 1e-10);
  CHECK(*r.report.unitarity_defect_n <= 1e-10);
  CHECK(*r.report.boundary_defect <= 1e-12);
}

TEST_CASE("verify_popuc: single node") {
  const auto p = normalize_circle(th::at_pis({"1/3", "4/3"}), th::at_pis({"1"}));
  const auto r = reconstruct_circle(p, {}, ToleranceProfile::strict());
  CHECK(r.report.passed());
  // Psi_1(xi) = xi - conj(b_m) = 0 by construction.
  CHECK(r.report.spectrum_residual_m <= 1e-15);
}

TEST_CASE("verify_popuc: random n = 6, m = 2 instances") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const auto raw = random_circle_pair(rng, 6, 2);
    const auto r = reconstruct_circle(normalize_circle(raw.zetas, raw.xis), {}, ToleranceProfile::standard());
    CHECK(r.report.passed());
  }
}

TEST_CASE("verify_popuc: a perturbed matrix fails") {
  auto r = reconstruct_circle(th::circle_three(), {}, ToleranceProfile::strict());
  r.popuc.c_n(0, 0) += Complex(1e-6, 0.0);
  const auto rep = verify_popuc(r.pair, r.weights.omega, r.popuc, ToleranceProfile::strict());
  CHECK_FALSE(rep.passed());
  CHECK(*rep.unitarity_defect_n > 1e-10);
}

TEST_CASE("brute oracles") {
  const auto p = th::qpair({"1", "2", "3", "4"}, {"3/2", "7/2"});
  const auto r = reconstruct_real<Rational>(p, {}, ToleranceProfile::strict());
  CHECK(brute_charpoly(r.j_n, 4) == Polynomial<Rational>::from_roots(p.xs));
  CHECK(brute_charpoly(r.j_n, 2) == Polynomial<Rational>::from_roots(p.ys));
  CHECK(brute_nullspace(assemble_system_real(p).entries).size() == 2);
  CHECK(th::code_of([&] { brute_charpoly(Matrix<Rational>(9, 9), 9); }) == ErrorCode::DimensionTooLarge);

  const auto c2 = cmv_matrix(std::vector<Complex>{Complex(0.0, 0.0)}, Complex(1.0, 0.0));
  CHECK(std::abs(brute_det(c2, Complex(1.0, 0.0)).value) < 1e-15);
  CHECK(std::abs(brute_det(c2, Complex(-1.0, 0.0)).value) < 1e-15);
  CHECK(std::abs(brute_det(c2, Complex(0.0, 1.0)).value) > 0.5);
}

TEST_CASE("brute_charpoly agrees with the recurrence for k <= 8") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-9, 9), pos(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    JacobiData<Rational> d;
    for (int k = 0; k < 8; ++k) d.beta.push_back(Rational(num(rng), pos(rng)));
    for (auto& b : d.beta) b.canonicalize();
    for (int k = 0; k < 7; ++k) d.gamma.push_back(Rational(pos(rng), pos(rng)));
    for (auto& g : d.gamma) g.canonicalize();
    const auto j = jacobi_matrix(d);
    for (std::size_t k = 0; k <= 8; ++k) {
      const auto poly = brute_charpoly(j, k);
      for (const char* x : {"0", "1/3", "-5/2", "7"}) CHECK(poly(q(x)) == eval_charpoly(d, k, q(x)));
    }
  }
}

TEST_CASE("subspace residual") {
  const std::vector<std::vector<Complex>> basis{{1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {2.0, 1.0, 0.0}};
  CHECK(subspace_residual(basis, {3.0, -2.0, 0.0}) < 1e-15);
  CHECK(subspace_residual(basis, {0.0, 0.0, 1.0}) == doctest::Approx(1.0));
}
