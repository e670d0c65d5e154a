#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "twospec/fuzz.hpp"
#include "twospec/oprl.hpp"
#include "twospec/verify.hpp"

using namespace twospec;
using th::q;
using th::qs;

namespace {

const auto kXs = qs({"1", "2", "3", "4"});

Polynomial<Rational> poly(std::initializer_list<const char*> ascending) { return Polynomial<Rational>(qs(ascending)); }

// Four-node weights for coefficient s: omega^(1) + s omega^(2).
std::vector<Rational> four_node_weights(const Rational& s) {
  const auto a = qs({"4/15", "2/3", "0", "2/15"});
  const auto b = qs({"2/15", "0", "2/3", "4/15"});
  std::vector<Rational> w(4);
  for (std::size_t j = 0; j < 4; ++j) w[j] = a[j] + s * b[j];
  return w;
}

}  // namespace

TEST_CASE("moments by direct summation") {
  const auto w = qs({"2/5", "2/3", "2/3", "2/5"});
  const auto mu = moments_real<Rational>(kXs, w, 8);
  CHECK(mu.mu[0] == q("32/15"));
  CHECK(mu.mu[1] == q("16/3"));

  const auto single = moments_real<Rational>(qs({"3/2"}), qs({"1"}), 4);
  CHECK(single.mu == qs({"1", "3/2", "9/4", "27/8"}));

  const auto scaled = moments_real<Rational>(kXs, qs({"4/5", "4/3", "4/3", "4/5"}), 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(scaled.mu[k] == 2 * mu.mu[k]);

  CHECK(th::code_of([] { moments_real<Rational>(kXs, qs({"1"}), 2); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("Stieltjes on the four-node default weights") {
  const auto d = stieltjes<Rational>(kXs, qs({"2/5", "2/3", "2/3", "2/5"}));
  REQUIRE(d.polys.size() == 5);
  CHECK(d.polys[1] == poly({"-5/2", "1"}));
  CHECK(d.polys[2] == poly({"21/4", "-5", "1"}));
  CHECK(d.polys[3] == poly({"-345/32", "269/16", "-15/2", "1"}));
  CHECK(d.polys[4] == poly({"24", "-50", "35", "-10", "1"}));
}

TEST_CASE("Stieltjes on the four-node case with s1 = 3") {
  const auto w = four_node_weights(q("3"));
  CHECK(w == qs({"2/3", "2/3", "2", "14/15"}));
  const auto d = stieltjes<Rational>(kXs, w);
  CHECK(d.polys[1] == poly({"-11/4", "1"}));
  CHECK(d.polys[3] == poly({"-187/16", "18", "-31/4", "1"}));
  CHECK(d.polys[2] == poly({"21/4", "-5", "1"}));
}

TEST_CASE("closed forms for beta and gamma in the parameter") {
  for (const char* s_text : {"1", "2", "3", "1/2", "7"}) {
    const Rational s = q(s_text);
    const auto d = stieltjes<Rational>(kXs, four_node_weights(s));
    const Rational s1 = s + 1;
    const Rational quad = 3 * s * s + 10 * s + 3;
    CHECK(d.beta[0] == (3 * s + 2) / s1);
    CHECK(d.beta[1] == (2 * s + 3) / s1);
    CHECK(d.gamma[0] == quad / (4 * s1 * s1));
    CHECK(d.gamma[1] == 15 * s1 * s1 / (4 * quad));
  }
  const auto d2 = stieltjes<Rational>(kXs, four_node_weights(q("2")));
  CHECK(d2.beta[0] == q("8/3"));
  CHECK(d2.gamma[0] == q("35/36"));
}

TEST_CASE("Jacobi matrix layout") {
  const auto one = stieltjes<Rational>(qs({"5/3"}), qs({"1"}));
  const auto j1 = jacobi_matrix(one);
  CHECK(j1.rows() == 1);
  CHECK(j1(0, 0) == q("5/3"));
  CHECK(one.polys[1] == poly({"-5/3", "1"}));

  const auto d = stieltjes<Rational>(kXs, four_node_weights(q("1")));
  const auto j = jacobi_matrix(d);
  for (std::size_t i = 0; i < 4; ++i) CHECK(j(i, i) == q("5/2"));
  CHECK(j(1, 0) == 1);
  CHECK(j(2, 1) == q("15/16"));
  CHECK(j(3, 2) == q("9/16"));
  for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(j(i, i + 1) == 1);
  CHECK(j(0, 2) == 0);
  CHECK(j(3, 0) == 0);
}

TEST_CASE("characteristic polynomial evaluation") {
  const auto d = stieltjes<Rational>(kXs, qs({"2/5", "2/3", "2/3", "2/5"}));
  CHECK(eval_charpoly(d, 4, q("3")) == 0);
  CHECK(eval_charpoly(d, 2, q("3/2")) == 0);
  const Rational x = q("7/11");
  const auto j = jacobi_matrix(d);
  const Rational det2 = (x - j(0, 0)) * (x - j(1, 1)) - j(0, 1) * j(1, 0);
  CHECK(eval_charpoly(d, 2, x) == det2);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(eval_charpoly(d, k, x) == d.polys[k](x));
  CHECK(th::code_of([&] { eval_charpoly(d, 5, x); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("scaling the weights leaves the recurrence unchanged") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(1, 40);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> xs, w;
    for (int j = 0; j < 6; ++j) {
      xs.push_back(Rational(j * 3 + num(rng) % 3, 2));
      w.push_back(Rational(num(rng), 7));
    }
    for (auto& x : xs) x.canonicalize();
    for (auto& v : w) v.canonicalize();
    std::vector<Rational> w2 = w;
    for (auto& v : w2) v *= q("13/5");
    const auto a = stieltjes<Rational>(xs, w);
    const auto b = stieltjes<Rational>(xs, w2);
    CHECK(a.beta == b.beta);
    CHECK(a.gamma == b.gamma);
    for (const auto& g : a.gamma) CHECK(g > 0);
    CHECK(a.polys[6] == Polynomial<Rational>::from_roots(xs));
  }
}

TEST_CASE("consecutive degrees: one circuit, recurrence independent of scale") {
  const auto p = th::qpair({"-2", "0", "1", "5"}, {"-1", "1/2", "3"});
  const AdmissibleFamily fam(bands_real(p, check_interlace_real(p)));
  CHECK(*fam.size() == 1);
  const auto w = circuit_real(p, fam.at(0)).weights;
  const auto d = stieltjes<Rational>(p.xs, w);
  CHECK(d.polys[3] == Polynomial<Rational>::from_roots(p.ys));
}

TEST_CASE("Stieltjes errors") {
  CHECK(th::code_of([] { stieltjes<Rational>(qs({"1", "1", "2"}), qs({"1", "1", "1"})); }) == ErrorCode::ZeroNorm);
  CHECK(th::code_of([] { stieltjes<Rational>(qs({"1", "2"}), qs({"1", "-1"})); }) == ErrorCode::ZeroNorm);
  CHECK(th::code_of([] { stieltjes<double>(std::vector<double>{1.0, 1.0 + 1e-9, 2.0}, std::vector<double>{1, 1, 1}); }) ==
        ErrorCode::ZeroNorm);
  CHECK(th::code_of([] { stieltjes<Rational>(qs({"1", "2"}), qs({"1"})); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("float Stieltjes matches the product of nodes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + trial % 16;
    const auto p = random_real_pair(rng, n, 1 + trial % 3);
    std::vector<double> w(n);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (auto& v : w) v = u(rng);
    const auto d = stieltjes<double>(p.xs, w);
    const auto target = Polynomial<double>::from_roots(p.xs);
    const auto scale = detail::absolute_product<double>(p.xs);
    CHECK(detail::coefficient_deviation(d.polys[n], target, scale) < 1e-9);
  }
}

TEST_CASE("float recurrence matches the exact one at high degree") {
  std::vector<Rational> xs, w;
  std::vector<double> xd, wd;
  for (int j = 0; j < 40; ++j) {
    xs.push_back(Rational(2 * j + 1));
    w.push_back(Rational(j % 3 + 1, 7));
    w.back().canonicalize();
    xd.push_back(xs.back().get_d());
    wd.push_back(w.back().get_d());
  }
  const auto exact = stieltjes<Rational>(xs, w);
  const auto fl = stieltjes<double>(xd, wd);
  for (std::size_t k = 0; k < 40; ++k) CHECK(fl.beta[k] == doctest::Approx(exact.beta[k].get_d()).epsilon(1e-12));
  for (std::size_t k = 0; k < 39; ++k) CHECK(fl.gamma[k] == doctest::Approx(exact.gamma[k].get_d()).epsilon(1e-12));

  // Twenty well separated nodes in [-1, 1] have tiny norms but no degeneracy.
  std::vector<double> small(20), ones(20, 1.0);
  for (std::size_t j = 0; j < 20; ++j) small[j] = -1.0 + 2.0 * static_cast<double>(j) / 19.0;
  CHECK(th::code_of([&] { stieltjes<double>(small, ones); }) == std::nullopt);
}
