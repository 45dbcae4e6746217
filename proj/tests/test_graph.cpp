#include <filesystem>

#include "doctest.h"
#include "twodist/graph.hpp"

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

}  // namespace

TEST_CASE("grid counts") {
  Graph g = red_or_blue_grid({1, 1, Colour::Red});
  CHECK(g.num_vertices == 4);
  CHECK(g.red_edges.size() == 4);
  Graph h = red_or_blue_grid({2, 3, Colour::Red});
  CHECK(h.num_vertices == 12);
  CHECK(h.red_edges.size() == 17);
  Graph b = red_or_blue_grid({4, 4, Colour::Blue});
  CHECK(b.num_vertices == 25);
  CHECK(b.blue_edges.size() == 40);
  CHECK(b.red_edges.empty());
}

TEST_CASE("grid counts match the closed forms up to 8x8") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 8; ++k) {
      Graph g = red_or_blue_grid({n, k, Colour::Red});
      CHECK(g.num_vertices == (n + 1) * (k + 1));
      CHECK(static_cast<int>(g.red_edges.size()) == (n + 1) * k + n * (k + 1));
    }
}

TEST_CASE("connect_with_grid adds fresh vertices") {
  Graph g;
  g.num_vertices = 4;
  g.add_edge(Colour::Red, 0, 1);
  g.add_edge(Colour::Red, 2, 3);
  Graph h = connect_with_grid(g, 0, 1, 2, 3, {3, 3, Colour::Red});
  CHECK(h.num_vertices == 4 + 12);
  CHECK_THROWS_AS(connect_with_grid(g, 0, 0, 2, 3, {3, 3, Colour::Red}), CornerClash);
}

TEST_CASE("connect_with_grid rejects colour conflicts") {
  Graph g;
  g.num_vertices = 4;
  g.add_edge(Colour::Blue, 0, 1);
  // A 1xk grid would lay a red edge on the blue pair (0,1).
  CHECK_THROWS_AS(connect_with_grid(g, 0, 1, 2, 3, {1, 3, Colour::Red}), CornerClash);
}

TEST_CASE("disjoint union shifts and counts add") {
  Graph e;
  e.num_vertices = 2;
  e.add_edge(Colour::Red, 0, 1);
  Graph u = disjoint_union(e, e);
  CHECK(u.num_vertices == 4);
  CHECK(u.red_edges.size() == 2);
  CHECK(u.red_edges[1] == VertexPair{2, 3});
  Graph empty;
  Graph same = disjoint_union(e, empty);
  CHECK(same.num_vertices == 2);
  CHECK(same.red_edges == e.red_edges);
}

TEST_CASE("disjoint union renames colliding classes") {
  Graph a;
  a.num_vertices = 2;
  a.add_class("c1", Colour::Red);
  a.add_green(0, 1, "c1");
  Graph u = disjoint_union(a, a);
  REQUIRE(u.classes.size() == 2);
  CHECK(u.classes[0].id != u.classes[1].id);
  CHECK(validate(u).empty());
}

TEST_CASE("union is associative up to relabeling") {
  Graph a = triangle_rrb();
  Graph b;
  b.num_vertices = 2;
  b.add_edge(Colour::Blue, 0, 1);
  Graph c = red_or_blue_grid({1, 1, Colour::Red});
  Graph left = disjoint_union(disjoint_union(a, b), c);
  Graph right = disjoint_union(a, disjoint_union(b, c));
  left.labels.clear();
  right.labels.clear();
  CHECK(left == right);
}

TEST_CASE("invert colours is an involution") {
  Graph g = triangle_rrb();
  g.num_vertices = 4;
  g.add_class("k", Colour::Blue);
  g.add_green(0, 3, "k");
  Graph gi = invert_colours(g);
  CHECK(gi.blue_edges.size() == 2);
  CHECK(gi.red_edges.size() == 1);
  CHECK(gi.classes[0].colour == Colour::Red);
  CHECK(invert_colours(gi) == g);
}

TEST_CASE("validate reports problems") {
  Graph ok = triangle_rrb();
  CHECK(validate(ok).empty());

  Graph loop;
  loop.num_vertices = 1;
  loop.red_edges.push_back({0, 0});
  auto v1 = validate(loop);
  REQUIRE(!v1.empty());
  CHECK(v1[0].find("self-loop") != std::string::npos);

  Graph undeclared;
  undeclared.num_vertices = 2;
  undeclared.add_green(0, 1, "nope");
  auto v2 = validate(undeclared);
  CHECK(!v2.empty());

  Graph overlap = triangle_rrb();
  overlap.add_class("k", Colour::Red);
  overlap.add_green(0, 1, "k");
  auto v3 = validate(overlap);
  CHECK(!v3.empty());
}

TEST_CASE("pvebg_to_ebg counts") {
  // One red class with two disjoint green edges, W = 4.
  Graph g;
  g.num_vertices = 4;
  g.add_class("c", Colour::Red);
  g.add_green(0, 1, "c");
  g.add_green(2, 3, "c");
  Graph e = pvebg_to_ebg(g, 4);
  CHECK(e.kind == GraphKind::Ebg);
  CHECK(e.green_edges.empty());
  CHECK(e.num_vertices == 4 + 21);  // 25 grid vertices minus 4 corners

  // Three green edges chain into two grids.
  Graph g3 = g;
  g3.num_vertices = 6;
  g3.add_green(4, 5, "c");
  Graph e3 = pvebg_to_ebg(g3, 4);
  CHECK(e3.num_vertices == 6 + 42);

  // A singleton class imposes no constraint and just disappears.
  Graph g1;
  g1.num_vertices = 2;
  g1.add_class("solo", Colour::Blue);
  g1.add_green(0, 1, "solo");
  Graph e1 = pvebg_to_ebg(g1, 4);
  CHECK(e1.num_vertices == 2);
  CHECK(e1.blue_edges.empty());
  CHECK(e1.green_edges.empty());
}

TEST_CASE("pvebg_to_ebg fresh-vertex formula across classes") {
  for (int W = 2; W <= 6; ++W) {
    Graph g;
    g.num_vertices = 8;
    g.add_class("a", Colour::Red);
    g.add_class("b", Colour::Blue);
    for (int i = 0; i < 3; ++i) g.add_green(2 * i, 2 * i + 1, "a");
    g.add_green(6, 7, "b");
    Graph e = pvebg_to_ebg(g, W);
    int per_grid = (W + 1) * (W + 1) - 4;
    CHECK(e.num_vertices == 8 + 2 * per_grid);
  }
}

TEST_CASE("graph files round trip byte-identically") {
  Graph g = triangle_rrb();
  g.labels[0] = "a_{1,0}";
  g.add_class("c1", Colour::Red);
  g.add_green(1, 2, "c1");  // NB: overlaps blue, validate would complain
  g.blue_edges.clear();
  g.normalize();
  std::string one = graph_to_json(g);
  Graph back = graph_from_json(one);
  std::string two = graph_to_json(back);
  CHECK(one == two);
  CHECK(back == g);

  auto tmp = std::filesystem::temp_directory_path() / "twodist_roundtrip.json";
  save_graph(g, tmp.string());
  Graph loaded = load_graph(tmp.string());
  CHECK(graph_to_json(loaded) == one);
  CHECK(graph_content_hash(loaded) == graph_content_hash(g));
  std::filesystem::remove(tmp);
}
