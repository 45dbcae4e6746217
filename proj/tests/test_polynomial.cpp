#include "doctest.h"
#include "twodist/polynomial.hpp"

using namespace twodist;

TEST_CASE("difference of squares") {
  IntPoly a = IntPoly::of({-2, 1});  // x - 2
  IntPoly b = IntPoly::of({2, 1});   // x + 2
  CHECK(a * b == IntPoly::of({-4, 0, 1}));
}

TEST_CASE("reflect flips odd coefficients") {
  IntPoly p = IntPoly::of({-1, -1, 1});  // x^2 - x - 1
  CHECK(p.reflect() == IntPoly::of({-1, 1, 1}));
  CHECK(p.reflect().reflect() == p);
}

TEST_CASE("formal derivative") {
  IntPoly p = IntPoly::of({1, 0, -3, 0, 1});  // x^4 - 3x^2 + 1
  CHECK(p.derivative() == IntPoly::of({0, -6, 0, 4}));
}

TEST_CASE("add sub negate") {
  IntPoly p = IntPoly::of({1, 2});
  IntPoly q = IntPoly::of({3, -2});
  CHECK(p + q == IntPoly::of({4}));
  CHECK(p - p == IntPoly());
  CHECK(p.negate() + p == IntPoly());
}

TEST_CASE("evenness predicate") {
  CHECK(IntPoly::of({2, 0, -1}).is_even());
  CHECK_FALSE(IntPoly::of({-1, -1, 1}).is_even());
  CHECK(IntPoly::of({7}).is_even());
}

TEST_CASE("exact rational evaluation") {
  IntPoly p = IntPoly::of({2, 0, -1});  // -x^2 + 2
  CHECK(p.eval(Rat(1)) == Rat(1));
  CHECK(p.eval(make_rat(3, 2)) == make_rat(-1, 4));
}

TEST_CASE("gcd and squarefree part") {
  IntPoly x2m4 = IntPoly::of({-4, 0, 1});
  IntPoly sq = x2m4 * x2m4 * IntPoly::of({-1, 1});
  IntPoly g = poly_gcd(sq, sq.derivative());
  CHECK(g.degree() == 2);
  IntPoly s = sq.squarefree_part();
  CHECK(s.degree() == 3);
  CHECK(s == IntPoly::of({-4, 0, 1}) * IntPoly::of({-1, 1}));
}

TEST_CASE("exact division") {
  IntPoly a = IntPoly::of({-4, 0, 1});
  IntPoly b = IntPoly::of({-2, 1});
  CHECK(poly_div_exact(a, b) == IntPoly::of({2, 1}));
  CHECK_THROWS(poly_div_exact(IntPoly::of({1, 1}), IntPoly::of({0, 1})));
}

TEST_CASE("simplest rational search") {
  CHECK(simplest_rational_between(make_rat(1, 3), make_rat(1, 2)) == make_rat(2, 5));
  CHECK(simplest_rational_between(Rat(3), Rat(10)) == Rat(4));
  Rat q = simplest_nontrivial_rational_between(make_rat(9, 10), Rat(1));
  CHECK(q > make_rat(9, 10));
  CHECK(q < 1);
  CHECK(q.get_num() >= 2);
  CHECK(q.get_den() >= 2);
  Rat r = simplest_nontrivial_rational_between(make_rat(1, 5), make_rat(1, 4));
  CHECK(r.get_num() >= 2);
}
