#include <cmath>

#include "doctest.h"
#include "twodist/algebraic.hpp"

using namespace twodist;

TEST_CASE("isolate roots of x^2 - 2") {
  auto roots = isolate_real_roots(IntPoly::of({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].to_double() == doctest::Approx(-1.41421356).epsilon(1e-8));
  CHECK(roots[1].to_double() == doctest::Approx(1.41421356).epsilon(1e-8));
}

TEST_CASE("x^2 + 1 has no real roots") {
  CHECK(isolate_real_roots(IntPoly::of({1, 0, 1})).empty());
}

TEST_CASE("-x^4 + 5x^2 factors as -x^2(x^2-5)") {
  auto roots = isolate_real_roots(IntPoly::of({0, 0, 5, 0, -1}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].to_double() == doctest::Approx(-std::sqrt(5.0)));
  CHECK(roots[1].compare(Rat(0)) == 0);
  CHECK(roots[2].to_double() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("max_root") {
  auto m = max_root(IntPoly::of({2, 0, -1}));
  REQUIRE(m.has_value());
  CHECK(m->to_double() == doctest::Approx(std::sqrt(2.0)));
  auto m2 = max_root(IntPoly::of({0, 0, 5, 0, -1}));
  REQUIRE(m2.has_value());
  CHECK(m2->to_double() == doctest::Approx(std::sqrt(5.0)));
  CHECK_FALSE(max_root(IntPoly::of({-1, 0, -1})).has_value());
}

TEST_CASE("refinement keeps the single-root invariant") {
  auto roots = isolate_real_roots(IntPoly::of({-2, 0, 1}));
  AlgebraicNumber a = roots[1];
  auto chain = sturm_chain(a.minpoly());
  for (int k = 0; k < 64; ++k) {
    a.refine();
    if (a.is_rational()) break;
    CHECK(sturm_count(chain, a.lo(), a.hi()) == 1);
  }
}

TEST_CASE("even minimal polynomial of a rational") {
  IntPoly w = even_minimal_polynomial(AlgebraicNumber(Rat(2)));
  CHECK(w == IntPoly::of({-4, 0, 1}));
}

TEST_CASE("even minimal polynomial of sqrt 2 is already even") {
  auto roots = isolate_real_roots(IntPoly::of({-2, 0, 1}));
  IntPoly w = even_minimal_polynomial(roots[1]);
  CHECK(w == IntPoly::of({-2, 0, 1}));
}

TEST_CASE("even minimal polynomial of the golden ratio") {
  auto roots = isolate_real_roots(IntPoly::of({-1, -1, 1}));
  REQUIRE(roots.size() == 2);
  IntPoly w = even_minimal_polynomial(roots[1]);  // (1+sqrt5)/2
  CHECK(w == IntPoly::of({1, 0, -3, 0, 1}));
  CHECK(w.is_even());
  // Simple-root witness: sign change across the isolating interval.
  AlgebraicNumber phi = roots[1];
  phi.refine_to_width(make_rat(1, 1000));
  CHECK(w.eval(phi.lo()) * w.eval(phi.hi()) < 0);
}

TEST_CASE("evenness and sign flip also hold for reducible square-free minpolys") {
  // alpha = 2 carried by the square-free but reducible poly (x-2)(x+2)(x-3).
  IntPoly mu = IntPoly::of({-2, 1}) * IntPoly::of({2, 1}) * IntPoly::of({-3, 1});
  AlgebraicNumber alpha(mu, make_rat(15, 8), make_rat(17, 8));
  IntPoly w = even_minimal_polynomial(alpha);
  CHECK(w.is_even());
  CHECK(alpha.sign_of(w) == 0);
  CHECK(alpha.sign_of(w.derivative()) != 0);
}

TEST_CASE("exact comparisons") {
  auto r2 = isolate_real_roots(IntPoly::of({-2, 0, 1}))[1];
  auto r3 = isolate_real_roots(IntPoly::of({-3, 0, 1}))[1];
  CHECK(r2.compare(r3) < 0);
  CHECK(r2.compare(make_rat(3, 2)) < 0);
  CHECK(r2.compare(make_rat(7, 5)) > 0);
  auto r2b = isolate_real_roots(IntPoly::of({-4, 0, 0, 0, 1}))[1];  // x^4 = 4
  CHECK(r2.compare(r2b) == 0);
  CHECK(r2.floor() == 1);
  CHECK(r3.floor() == 1);
  CHECK(AlgebraicNumber(make_rat(7, 2)).floor() == 3);
  CHECK(AlgebraicNumber(Rat(3)).floor() == 3);
}

TEST_CASE("sign_of evaluates polynomials at algebraic points") {
  auto r2 = isolate_real_roots(IntPoly::of({-2, 0, 1}))[1];
  CHECK(r2.sign_of(IntPoly::of({-2, 0, 1})) == 0);
  CHECK(r2.sign_of(IntPoly::of({0, 1})) > 0);          // x > 0
  CHECK(r2.sign_of(IntPoly::of({-3, 0, 1})) < 0);      // x^2 - 3 < 0
  CHECK(r2.sign_of(IntPoly::of({-1, 0, 1})) > 0);      // x^2 - 1 > 0
}
