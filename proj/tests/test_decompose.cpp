#include <random>

#include "doctest.h"
#include "twodist/decompose.hpp"
#include "twodist/errors.hpp"

using namespace twodist;

namespace {

AlgebraicNumber sqrt_of(long v) {
  auto roots = isolate_real_roots(IntPoly::of({-v, 0, 1}));
  return roots.back();
}

bool in_all_terms(const std::vector<DecompTerm>& terms, const Rat& x) {
  for (const auto& t : terms)
    if (!eval_S(t, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("classify the four endpoints of (0.5,1] U [2,3)") {
  auto s = SemialgebraicSet::parse("(1/2,1] U [2,3)");
  auto vals = s.endpoint_values();
  REQUIRE(vals.size() == 4);
  Endpoint dummy = Endpoint::zero();
  CHECK(classify_endpoint(s, vals[0], dummy, dummy) == EndpointType::T1);
  CHECK(classify_endpoint(s, vals[1], dummy, dummy) == EndpointType::T6);
  CHECK(classify_endpoint(s, vals[2], dummy, dummy) == EndpointType::T3);
  CHECK(classify_endpoint(s, vals[3], dummy, dummy) == EndpointType::T4);
}

TEST_CASE("classify rejects non-endpoints") {
  auto s = SemialgebraicSet::parse("(1/2,1]");
  Endpoint dummy = Endpoint::zero();
  CHECK_THROWS_AS(classify_endpoint(s, AlgebraicNumber(make_rat(3, 4)), dummy, dummy),
                  NonNormalizedSet);
}

TEST_CASE("table rows") {
  // Type 2 squares omega regardless of the derivative sign.
  AlgebraicNumber one(Rat(1));
  IntPoly w1 = even_minimal_polynomial(one);  // x^2 - 1
  auto [p2, z2] = build_local_term(EndpointType::T2, w1, one, one.floor());
  CHECK(p2 == (w1 * w1).negate());
  CHECK(z2 == 0);

  // Type 4 with increasing omega keeps -omega and zeta = 1.
  auto [p4, z4] = build_local_term(EndpointType::T4, w1, one, one.floor());
  CHECK(p4 == w1.negate());
  CHECK(z4 == 1);

  // Type 1 at sqrt2: -(x^2-2)(x^2-4), zeta = 1.
  AlgebraicNumber r2 = sqrt_of(2);
  IntPoly w2 = even_minimal_polynomial(r2);
  auto [p1, z1] = build_local_term(EndpointType::T1, w2, r2, r2.floor());
  CHECK(p1 == (IntPoly::of({-2, 0, 1}) * IntPoly::of({-4, 0, 1})).negate());
  CHECK(z1 == 1);
  // Sign pattern in a punctured neighbourhood of sqrt2: negative below (out),
  // positive above (in), matching an (out, out, in) endpoint.
  CHECK(p1.eval(make_rat(7, 5)) < 0);
  CHECK(p1.eval(make_rat(29, 20)) > 0);
}

TEST_CASE("eval_S basics") {
  DecompTerm t;
  t.p = IntPoly::of({2, 0, -1});
  t.L = Rat(0);
  t.U_infinite = true;
  t.zeta = 0;
  CHECK(eval_S(t, Rat(1)));
  CHECK_FALSE(eval_S(t, Rat(2)));
  t.zeta = 1;
  CHECK(eval_S(t, make_rat(1414213, 1000000)));
  t.L = make_rat(1, 2);
  CHECK(eval_S(t, make_rat(1, 2)));
  t.U_infinite = false;
  t.U = Rat(3);
  CHECK(eval_S(t, Rat(5)));
}

TEST_CASE("decompose a closed interval with an algebraic end") {
  // sigma = [1/2, sqrt2]
  std::vector<SetInterval> ivs;
  ivs.push_back({Endpoint::finite(AlgebraicNumber(make_rat(1, 2)), true),
                 Endpoint::finite(sqrt_of(2), true)});
  SemialgebraicSet s(std::move(ivs));
  auto terms = decompose(s, make_rat(1, 2), Rat(2));
  REQUIRE(terms.size() == 3);  // two endpoints + gap term
  for (long num = 1; num <= 60; ++num) {
    Rat x = make_rat(num, 20);
    // Samples near the algebraic endpoint within double precision of it are
    // fine: 1.4 and 1.45 straddle sqrt2 comfortably on this grid.
    CHECK(in_all_terms(terms, x) == s.contains(x));
  }
}

TEST_CASE("decompose a single point") {
  auto s = SemialgebraicSet::parse("[1,1]");
  auto terms = decompose(s, make_rat(1, 2), Rat(2));
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].p == (IntPoly::of({-1, 0, 1}) * IntPoly::of({-1, 0, 1})).negate());
  CHECK(terms[0].zeta == 0);
  for (long num = 1; num <= 60; ++num) {
    Rat x = make_rat(num, 20);
    CHECK(in_all_terms(terms, x) == (x == 1));
  }
}

TEST_CASE("decompose the whole window") {
  auto s = SemialgebraicSet::parse("[1/2,2]");
  auto terms = decompose(s, make_rat(1, 2), Rat(2));
  REQUIRE(terms.size() == 3);  // n = 2 endpoint terms + gap term
  for (long num = 1; num <= 100; ++num) {
    Rat x = make_rat(num, 25);
    CHECK(in_all_terms(terms, x) == s.contains(x));
  }
}

TEST_CASE("decompose requires a nonempty set") {
  SemialgebraicSet empty{std::vector<SetInterval>{}};
  CHECK_THROWS_AS(decompose(empty, Rat(1), Rat(2)), EmptySetError);
}

TEST_CASE("randomized round trip against direct membership") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 25; ++iter) {
    // Random normalized set in [1/2, 2] with rational and quadratic endpoints.
    std::vector<AlgebraicNumber> points;
    int npts = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < npts; ++i) {
      if (rng() % 3 == 0) {
        long v = 1 + static_cast<long>(rng() % 12);  // sqrt(v)/2 in [1/2, 2]
        auto r = isolate_real_roots(IntPoly::of({-v, 0, 4}));
        points.push_back(r.back());
      } else {
        long den = 4 + static_cast<long>(rng() % 60);
        long lo = (den + 1) / 2;
        long num = lo + static_cast<long>(rng() % (den * 2 - lo + 1));
        points.push_back(AlgebraicNumber(make_rat(num, den)));
      }
    }
    std::sort(points.begin(), points.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.compare(b) < 0; });
    std::vector<SetInterval> ivs;
    for (size_t i = 0; i + 1 < points.size(); i += 2) {
      bool lo_closed = rng() % 2, hi_closed = rng() % 2;
      if (points[i].compare(points[i + 1]) == 0) lo_closed = hi_closed = true;
      ivs.push_back({Endpoint::finite(points[i], lo_closed),
                     Endpoint::finite(points[i + 1], hi_closed)});
    }
    SemialgebraicSet s(std::move(ivs));
    if (s.empty()) continue;
    auto terms = decompose(s, make_rat(1, 2), Rat(2));
    for (long num = 1; num <= 120; ++num) {
      Rat x = make_rat(num, 40);
      CAPTURE(iter);
      CAPTURE(num);
      CHECK(in_all_terms(terms, x) == s.contains(x));
    }
  }
}
