#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twodist/errors.hpp"

namespace twodist {

enum class Colour { Red, Blue };

inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

struct GreenClass {
  std::string id;
  Colour colour = Colour::Red;
  bool operator==(const GreenClass&) const = default;
};

// Directed; edges of one class must realize the same plane vector.
struct GreenEdge {
  int tail = 0;
  int head = 0;
  std::string cls;
  bool operator==(const GreenEdge&) const = default;
};

enum class GraphKind { Ebg, Pvebg };

using VertexPair = std::pair<int, int>;  // stored with first < second

// Edge-bicoloured graph, optionally with classed green edges (PVEBG).
struct Graph {
  GraphKind kind = GraphKind::Ebg;
  int num_vertices = 0;
  std::vector<VertexPair> red_edges;
  std::vector<VertexPair> blue_edges;
  std::vector<GreenEdge> green_edges;
  std::vector<GreenClass> classes;
  std::map<int, std::string> labels;

  int add_vertex(const std::string& label = {});
  void add_edge(Colour c, int u, int v);
  void add_class(const std::string& id, Colour c);
  void add_green(int tail, int head, const std::string& cls);
  bool has_class(const std::string& id) const;
  std::optional<Colour> edge_colour(int u, int v) const;

  // Sort edge lists and classes into the canonical file order.
  void normalize();

  bool operator==(const Graph&) const = default;
};

struct GridSpec {
  int n = 1;  // rows
  int k = 1;  // columns
  Colour colour = Colour::Red;
};

// Grid of (n+1)(k+1) vertices u_{i,j}; row steps and column steps all in the
// given colour; corners labelled.
Graph red_or_blue_grid(const GridSpec& spec);

// Insert a grid identifying its corners u_{0,0}, u_{n,0}, u_{0,k}, u_{n,k}
// with a, b, c, d. Throws CornerClash on degenerate corners or conflicting
// existing edges.
Graph connect_with_grid(const Graph& g, int a, int b, int c, int d, const GridSpec& spec);

Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph invert_colours(const Graph& g);

// Materialize a PVEBG: chain the green edges of each class with WxW grids of
// the class colour, then drop all green edges. W >= 2.
Graph pvebg_to_ebg(const Graph& g, int W);

// Empty result iff all structural invariants hold.
std::vector<std::string> validate(const Graph& g);

// Canonical JSON text per the file format; byte-stable.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

// FNV-1a over the canonical serialization; identifies graphs in reports.
std::string graph_content_hash(const Graph& g);

}  // namespace twodist
