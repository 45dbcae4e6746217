#include "twodist/graph.hpp"

#include <algorithm>
#include <set>

namespace twodist {

static VertexPair norm_pair(int u, int v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

int Graph::add_vertex(const std::string& label) {
  int id = num_vertices++;
  if (!label.empty()) labels[id] = label;
  return id;
}

void Graph::add_edge(Colour c, int u, int v) {
  auto& edges = c == Colour::Red ? red_edges : blue_edges;
  VertexPair p = norm_pair(u, v);
  if (std::find(edges.begin(), edges.end(), p) == edges.end()) edges.push_back(p);
}

void Graph::add_class(const std::string& id, Colour c) {
  for (const auto& gc : classes)
    if (gc.id == id) return;
  classes.push_back({id, c});
  kind = GraphKind::Pvebg;
}

void Graph::add_green(int tail, int head, const std::string& cls) {
  green_edges.push_back({tail, head, cls});
  kind = GraphKind::Pvebg;
}

bool Graph::has_class(const std::string& id) const {
  for (const auto& gc : classes)
    if (gc.id == id) return true;
  return false;
}

std::optional<Colour> Graph::edge_colour(int u, int v) const {
  VertexPair p = norm_pair(u, v);
  if (std::find(red_edges.begin(), red_edges.end(), p) != red_edges.end()) return Colour::Red;
  if (std::find(blue_edges.begin(), blue_edges.end(), p) != blue_edges.end()) return Colour::Blue;
  return std::nullopt;
}

void Graph::normalize() {
  std::sort(red_edges.begin(), red_edges.end());
  red_edges.erase(std::unique(red_edges.begin(), red_edges.end()), red_edges.end());
  std::sort(blue_edges.begin(), blue_edges.end());
  blue_edges.erase(std::unique(blue_edges.begin(), blue_edges.end()), blue_edges.end());
  std::sort(green_edges.begin(), green_edges.end(), [](const GreenEdge& a, const GreenEdge& b) {
    return std::tie(a.cls, a.tail, a.head) < std::tie(b.cls, b.tail, b.head);
  });
  std::sort(classes.begin(), classes.end(),
            [](const GreenClass& a, const GreenClass& b) { return a.id < b.id; });
}

Graph red_or_blue_grid(const GridSpec& spec) {
  Graph g;
  const int n = spec.n, k = spec.k;
  auto idx = [k](int i, int j) { return i * (k + 1) + j; };
  g.num_vertices = (n + 1) * (k + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= k; ++j) {
      if (j < k) g.add_edge(spec.colour, idx(i, j), idx(i, j + 1));
      if (i < n) g.add_edge(spec.colour, idx(i, j), idx(i + 1, j));
    }
  g.labels[idx(0, 0)] = "u_{0,0}";
  g.labels[idx(n, 0)] = "u_{" + std::to_string(n) + ",0}";
  g.labels[idx(0, k)] = "u_{0," + std::to_string(k) + "}";
  g.labels[idx(n, k)] = "u_{" + std::to_string(n) + "," + std::to_string(k) + "}";
  g.normalize();
  return g;
}

namespace detail {

// Shared by the public op (strict) and the materializer (corners may repeat
// when chained green edges share endpoints).
Graph insert_grid(const Graph& g, int a, int b, int c, int d, const GridSpec& spec,
                  bool allow_shared_corners) {
  for (int v : {a, b, c, d})
    if (v < 0 || v >= g.num_vertices) throw CornerClash("grid corner out of range");
  if (!allow_shared_corners) {
    std::set<int> distinct{a, b, c, d};
    if (distinct.size() != 4) throw CornerClash("grid corners must be distinct");
  }
  Graph out = g;
  const int n = spec.n, k = spec.k;
  std::vector<int> ids((n + 1) * (k + 1), -1);
  auto slot = [k](int i, int j) { return i * (k + 1) + j; };
  ids[slot(0, 0)] = a;
  ids[slot(n, 0)] = b;
  ids[slot(0, k)] = c;
  ids[slot(n, k)] = d;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= k; ++j)
      if (ids[slot(i, j)] < 0) ids[slot(i, j)] = out.add_vertex();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= k; ++j) {
      auto link = [&](int u, int v) {
        if (u == v) throw CornerClash("grid too small for shared corners");
        auto existing = out.edge_colour(u, v);
        if (existing && *existing != spec.colour)
          throw CornerClash("existing edge conflicts with grid colour");
        out.add_edge(spec.colour, u, v);
      };
      if (j < k) link(ids[slot(i, j)], ids[slot(i, j + 1)]);
      if (i < n) link(ids[slot(i, j)], ids[slot(i + 1, j)]);
    }
  out.normalize();
  return out;
}

}  // namespace detail

Graph connect_with_grid(const Graph& g, int a, int b, int c, int d, const GridSpec& spec) {
  return detail::insert_grid(g, a, b, c, d, spec, false);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph out = g1;
  const int shift = g1.num_vertices;
  out.num_vertices += g2.num_vertices;
  for (auto [u, v] : g2.red_edges) out.red_edges.push_back({u + shift, v + shift});
  for (auto [u, v] : g2.blue_edges) out.blue_edges.push_back({u + shift, v + shift});
  // Rename colliding class ids from g2 deterministically.
  std::map<std::string, std::string> rename;
  for (const auto& gc : g2.classes) {
    std::string id = gc.id;
    while (out.has_class(id)) id += "'";
    rename[gc.id] = id;
    out.classes.push_back({id, gc.colour});
  }
  for (const auto& ge : g2.green_edges)
    out.green_edges.push_back({ge.tail + shift, ge.head + shift, rename.at(ge.cls)});
  for (const auto& [v, lab] : g2.labels) out.labels[v + shift] = lab;
  if (g2.kind == GraphKind::Pvebg) out.kind = GraphKind::Pvebg;
  out.normalize();
  return out;
}

Graph invert_colours(const Graph& g) {
  Graph out = g;
  std::swap(out.red_edges, out.blue_edges);
  for (auto& gc : out.classes) gc.colour = other(gc.colour);
  out.normalize();
  return out;
}

Graph pvebg_to_ebg(const Graph& g, int W) {
  if (W < 2) throw Error("pvebg_to_ebg: W must be at least 2");
  Graph out = g;
  out.normalize();
  std::vector<GreenEdge> greens = out.green_edges;
  std::vector<GreenClass> classes = out.classes;
  out.green_edges.clear();
  out.classes.clear();
  out.kind = GraphKind::Ebg;
  for (const auto& gc : classes) {
    std::vector<GreenEdge> members;
    for (const auto& ge : greens)
      if (ge.cls == gc.id) members.push_back(ge);
    if (members.empty()) throw Error("pvebg_to_ebg: class '" + gc.id + "' has no edges");
    for (size_t t = 0; t + 1 < members.size(); ++t) {
      out = detail::insert_grid(out, members[t].tail, members[t].head, members[t + 1].tail,
                                members[t + 1].head, {W, W, gc.colour}, true);
    }
  }
  out.normalize();
  return out;
}

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> bad;
  auto vtx = [&](int v) { return v >= 0 && v < g.num_vertices; };
  std::map<VertexPair, int> roles;
  for (auto [u, v] : g.red_edges) {
    if (u == v) bad.push_back("self-loop at v" + std::to_string(u));
    if (!vtx(u) || !vtx(v)) bad.push_back("red edge endpoint out of range");
    roles[norm_pair(u, v)]++;
  }
  for (auto [u, v] : g.blue_edges) {
    if (u == v) bad.push_back("self-loop at v" + std::to_string(u));
    if (!vtx(u) || !vtx(v)) bad.push_back("blue edge endpoint out of range");
    roles[norm_pair(u, v)]++;
  }
  std::set<std::string> class_ids;
  for (const auto& gc : g.classes) {
    if (!class_ids.insert(gc.id).second) bad.push_back("duplicate class id '" + gc.id + "'");
  }
  for (const auto& ge : g.green_edges) {
    if (ge.tail == ge.head) bad.push_back("green self-loop at v" + std::to_string(ge.tail));
    if (!vtx(ge.tail) || !vtx(ge.head)) bad.push_back("green edge endpoint out of range");
    if (!class_ids.count(ge.cls)) bad.push_back("green edge references undeclared class '" + ge.cls + "'");
    roles[norm_pair(ge.tail, ge.head)]++;
  }
  for (const auto& [p, count] : roles) {
    if (count > 1)
      bad.push_back("vertex pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                    ") carries more than one edge role");
  }
  if (g.kind == GraphKind::Ebg && (!g.green_edges.empty() || !g.classes.empty()))
    bad.push_back("ebg kind with green data");
  for (const auto& [v, lab] : g.labels) {
    (void)lab;
    if (!vtx(v)) bad.push_back("label on missing vertex " + std::to_string(v));
  }
  return bad;
}

}  // namespace twodist
