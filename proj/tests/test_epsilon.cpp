#include <cmath>
#include <random>

#include "doctest.h"
#include "twodist/epsilon.hpp"
#include "twodist/errors.hpp"

using namespace twodist;

TEST_CASE("split_pos_neg") {
  auto [pp, pn] = split_pos_neg(IntPoly::of({2, 0, -1}));
  CHECK(pp == IntPoly::of({2}));
  CHECK(pn == IntPoly::of({0, 0, 1}));
  auto [pp2, pn2] = split_pos_neg(IntPoly::of({0, 0, 5, 0, -1}));
  CHECK(pp2 == IntPoly::of({0, 0, 5}));
  CHECK(pn2 == IntPoly::of({0, 0, 0, 0, 1}));
  auto [pp3, pn3] = split_pos_neg(IntPoly::of({7, 0, -2, 0, 3, 0, -1}));
  CHECK(pp3 == IntPoly::of({7, 0, 0, 0, 3}));
  CHECK(pn3 == IntPoly::of({0, 0, 2, 0, 0, 0, 1}));
  CHECK(pp3 - pn3 == IntPoly::of({7, 0, -2, 0, 3, 0, -1}));
}

TEST_CASE("choose_N picks the smallest admissible even integer") {
  // M = sqrt2, bound = sqrt2 / (2 sin(pi/4)) = 1 exactly: N = 2.
  CHECK(choose_N(IntPoly::of({2, 0, -1})) == 2);
  // M = sqrt5, bound ~ 2.92: N = 4.
  CHECK(choose_N(IntPoly::of({0, 0, 5, 0, -1})) == 4);
  // M = 10, bound = 10/sqrt2 ~ 7.07: N = 8.
  CHECK(choose_N(IntPoly::of({100, 0, -1})) == 8);
  // Exact tie at an even integer: M = 2 sqrt2, bound = 2, strict: N = 4.
  CHECK(choose_N(IntPoly::of({8, 0, -1})) == 4);
  CHECK_THROWS_AS(choose_N(IntPoly::of({-1, 0, -1})), NoPositiveRoot);
}

TEST_CASE("epsilon_of_d") {
  auto e1 = epsilon_of_d(2, 2.0);
  CHECK(std::arg(e1) == doctest::Approx(2.0 * M_PI / 3.0));
  CHECK(std::abs(e1) == doctest::Approx(1.0));
  CHECK(std::abs(2.0 * (1.0 + e1)) == doctest::Approx(2.0));

  auto e2 = epsilon_of_d(2, 1e-9);
  CHECK(std::arg(e2) == doctest::Approx(M_PI).epsilon(1e-4));

  auto e3 = epsilon_of_d(2, 2.0 * std::sqrt(2.0));
  CHECK(std::arg(e3) == doctest::Approx(M_PI / 2.0));

  CHECK_THROWS_AS(epsilon_of_d(2, 4.0), OutOfRange);
  CHECK_THROWS_AS(epsilon_of_d(2, 0.0), OutOfRange);
}

TEST_CASE("qp qn coefficients for -x^2 + 2") {
  auto [beta, gamma] = qp_qn_coefficients(IntPoly::of({2, 0, -1}), 2);
  REQUIRE(beta.size() == 1);
  CHECK(beta[0] == 2);
  REQUIRE(gamma.size() == 3);
  CHECK(gamma[0] == 4);
  CHECK(gamma[1] == 8);
  CHECK(gamma[2] == 4);
}

TEST_CASE("qp qn coefficients for -x^4 + 5x^2 with N = 4") {
  auto [beta, gamma] = qp_qn_coefficients(IntPoly::of({0, 0, 5, 0, -1}), 4);
  REQUIRE(beta.size() == 3);
  CHECK(beta[0] == 80);
  CHECK(beta[1] == 160);
  CHECK(beta[2] == 80);
  REQUIRE(gamma.size() == 5);
  CHECK(gamma[0] == 256);
  CHECK(gamma[1] == 1024);
  CHECK(gamma[2] == 1536);
  CHECK(gamma[3] == 1024);
  CHECK(gamma[4] == 256);
}

TEST_CASE("numeric cross-check |q_n(eps(d))| = p_n(d)") {
  IntPoly p = IntPoly::of({2, 0, -1});
  auto [beta, gamma] = qp_qn_coefficients(p, 2);
  (void)beta;
  double d = 1.0;
  auto eps = epsilon_of_d(2, d);
  std::complex<double> acc(0, 0);
  for (size_t k = 0; k < gamma.size(); ++k) acc += to_double(gamma[k]) * std::pow(eps, static_cast<double>(k));
  CHECK(std::abs(acc) == doctest::Approx(1.0).epsilon(1e-9));  // p_n(1) = 1
}

TEST_CASE("lemma identity |q_p(eps(d))| = p_p(d) exactly, randomized") {
  std::mt19937_64 rng(7);
  int built = 0;
  while (built < 20) {
    // Random admissible even p: deg <= 6, |coeffs| <= 9, negative lead,
    // at least one positive coefficient and a positive root.
    int half_deg = 1 + static_cast<int>(rng() % 3);
    std::vector<Int> cs(2 * half_deg + 1, Int(0));
    cs[2 * half_deg] = -(1 + static_cast<long>(rng() % 9));
    bool has_pos = false;
    for (int i = 0; i < half_deg; ++i) {
      long c = static_cast<long>(rng() % 19) - 9;
      cs[2 * i] = c;
      if (c > 0) has_pos = true;
    }
    if (!has_pos) continue;
    IntPoly p(cs);
    auto [pp, pn] = split_pos_neg(p);
    if (pn.degree() < 2) continue;
    int N;
    try {
      N = choose_N(p);
    } catch (const NoPositiveRoot&) {
      continue;
    }
    auto [beta, gamma] = qp_qn_coefficients(p, N);
    for (const auto& b : beta) CHECK(b > 0);
    for (const auto& g : gamma) CHECK(g > 0);

    auto M = max_root(p);
    REQUIRE(M.has_value());
    double md = M->to_double();
    for (int s = 1; s <= 20; ++s) {
      Rat d = Rat(static_cast<long>(std::floor(md * 1000.0 * s / 20.0)), 1000);
      d.canonicalize();
      if (d <= 0) continue;
      // Exact identity: |q_p(eps(d))|^2 == p_p(d)^2 and likewise for q_n.
      Rat qp2 = abs_squared_eps_poly(beta, N, d);
      Rat ppv = pp.eval(d);
      CHECK(qp2 == ppv * ppv);
      Rat qn2 = abs_squared_eps_poly(gamma, N, d);
      Rat pnv = pn.eval(d);
      CHECK(qn2 == pnv * pnv);
    }
    ++built;
  }
}
