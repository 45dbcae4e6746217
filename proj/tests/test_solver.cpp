#include <cmath>

#include "doctest.h"
#include "twodist/solver.hpp"

using namespace twodist;

namespace {

Graph triangle_rrb() {
  Graph g;
  g.num_vertices = 3;
  g.add_edge(Colour::Red, 0, 1);
  g.add_edge(Colour::Red, 0, 2);
  g.add_edge(Colour::Blue, 1, 2);
  g.normalize();
  return g;
}

SolveConfig quick(int restarts = 16) {
  SolveConfig cfg;
  cfg.restarts = restarts;
  cfg.box_radius = 4;
  return cfg;
}

}  // namespace

TEST_CASE("check accepts an exact red segment") {
  Graph g;
  g.num_vertices = 2;
  g.add_edge(Colour::Red, 0, 1);
  Representation rep;
  rep.points = {{0, 0}, {1, 0}};
  auto r = check_representation(g, 0.7, rep, quick());
  CHECK(r.status == FeasStatus::Feasible);
  CHECK(r.residual == 0);
}

TEST_CASE("check flags a wrong blue length") {
  Graph g;
  g.num_vertices = 2;
  g.add_edge(Colour::Blue, 0, 1);
  Representation rep;
  rep.points = {{0, 0}, {2, 0}};
  auto r = check_representation(g, 1.0, rep, quick());
  CHECK(r.status == FeasStatus::LikelyInfeasible);
  CHECK(r.residual == doctest::Approx(3.0));
}

TEST_CASE("check flags coincident vertices") {
  Graph g;
  g.num_vertices = 2;
  Representation rep;
  rep.points = {{0, 0}, {0, 0}};
  auto r = check_representation(g, 1.0, rep, quick());
  CHECK(r.status == FeasStatus::Degenerate);
}

TEST_CASE("triangle feasibility across d") {
  Graph tri = triangle_rrb();
  auto ok = solve(tri, 1.5, quick());
  CHECK(ok.status == FeasStatus::Feasible);
  // Solver never claims more than the checker verifies.
  auto replay = check_representation(tri, 1.5, *ok.rep, quick());
  CHECK(replay.status == FeasStatus::Feasible);

  auto bad = solve(tri, 2.5, quick(24));
  CHECK(bad.status == FeasStatus::LikelyInfeasible);
  CHECK(bad.residual > 1e-4);

  // Collinear-but-distinct is legal at the boundary d = 2.
  auto edge_case = solve(tri, 2.0, quick(32));
  CHECK(edge_case.status == FeasStatus::Feasible);
}

TEST_CASE("green classes transport vectors") {
  // Two green edges in one class plus a parallelogram pin: the classic
  // "distance equals d" toy (range (0, 2]).
  Graph g;
  g.num_vertices = 5;  // w0, w1, mid, x, y
  g.add_edge(Colour::Red, 0, 2);
  g.add_edge(Colour::Red, 2, 1);
  g.add_edge(Colour::Blue, 3, 4);
  g.add_class("pin", Colour::Red);
  g.add_green(3, 0, "pin");
  g.add_green(4, 1, "pin");
  g.normalize();

  auto ok = solve(g, 1.2, quick());
  REQUIRE(ok.status == FeasStatus::Feasible);
  const auto& pts = ok.rep->points;
  CHECK((pts[1] - pts[0]).norm() == doctest::Approx((pts[4] - pts[3]).norm()).epsilon(1e-6));
  CHECK((pts[1] - pts[0]).norm() == doctest::Approx(1.2).epsilon(1e-6));

  auto bad = solve(g, 2.4, quick(24));
  CHECK(bad.status == FeasStatus::LikelyInfeasible);
}

TEST_CASE("inconsistent green cycles are reported structurally") {
  Graph g;
  g.num_vertices = 2;
  g.add_class("c", Colour::Red);
  g.add_green(0, 1, "c");
  g.add_green(1, 0, "c");  // forces the class vector to zero
  CHECK_THROWS_AS(solve(g, 1.0, quick()), InconsistentGreenCycle);
}

TEST_CASE("structural coincidence is degenerate") {
  Graph g;
  g.num_vertices = 3;
  g.add_class("c", Colour::Red);
  g.add_green(0, 1, "c");
  g.add_green(0, 2, "c");  // vertices 1 and 2 coincide in every representation
  auto r = solve(g, 1.0, quick());
  CHECK(r.status == FeasStatus::Degenerate);
}

TEST_CASE("sweep locates the triangle boundary") {
  Graph tri = triangle_rrb();
  SolveConfig cfg = quick(12);
  auto prof = sweep_range(tri, 0.3, 3.0, 16, cfg);
  REQUIRE(!prof.inferred_intervals.empty());
  CHECK(prof.inferred_intervals.front().lo == doctest::Approx(0.3));
  CHECK(prof.inferred_intervals.back().hi == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("alignment recovers rotations and reflections") {
  Representation a;
  a.points = {{0, 0}, {1, 0}, {0.5, 0.8}};
  Representation rot;
  for (auto p : a.points) rot.points.push_back({-p.y() + 0.3, p.x() - 1.7});
  auto r1 = align_isometry(a, rot, {0, 1, 2});
  CHECK(r1.rms < 1e-12);
  CHECK_FALSE(r1.reflected);
  for (int v = 0; v < 3; ++v) CHECK((r1.rep.points[v] - a.points[v]).norm() < 1e-9);

  Representation refl;
  for (auto p : a.points) refl.points.push_back({p.x(), -p.y()});
  auto r2 = align_isometry(a, refl, {0, 1, 2});
  CHECK(r2.rms < 1e-12);
  CHECK(r2.reflected);

  auto r3 = align_isometry(a, a, {0, 1, 2});
  CHECK(r3.rms < 1e-12);
}

TEST_CASE("solve is deterministic for fixed seeds") {
  Graph tri = triangle_rrb();
  SolveConfig cfg = quick(8);
  cfg.rng_seed = 42;
  auto a = solve(tri, 1.3, cfg);
  auto b = solve(tri, 1.3, cfg);
  REQUIRE(a.status == FeasStatus::Feasible);
  REQUIRE(b.status == FeasStatus::Feasible);
  CHECK(a.restarts_used == b.restarts_used);
  for (int v = 0; v < 3; ++v) CHECK(a.rep->points[v] == b.rep->points[v]);
}

TEST_CASE("subgraph restriction law") {
  Graph tri = triangle_rrb();
  auto r = solve(tri, 1.5, quick());
  REQUIRE(r.status == FeasStatus::Feasible);
  Graph sub;  // induced coloured subgraph on {0, 1}
  sub.num_vertices = 2;
  sub.add_edge(Colour::Red, 0, 1);
  Representation restricted;
  restricted.points = {r.rep->points[0], r.rep->points[1]};
  auto rr = check_representation(sub, 1.5, restricted, quick());
  CHECK(rr.status == FeasStatus::Feasible);
}
