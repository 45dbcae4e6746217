#include "twodist/gadgets.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace twodist {

namespace {

// Bulk append without the per-edge dedup scan. Colliding class ids from the
// incoming graph are renamed deterministically (primes), as in disjoint_union.
int append_graph(Graph& out, const Graph& g) {
  int shift = out.num_vertices;
  out.num_vertices += g.num_vertices;
  for (auto [u, v] : g.red_edges) out.red_edges.push_back({u + shift, v + shift});
  for (auto [u, v] : g.blue_edges) out.blue_edges.push_back({u + shift, v + shift});
  std::map<std::string, std::string> rename;
  for (const auto& gc : g.classes) {
    std::string id = gc.id;
    while (out.has_class(id)) id += "'";
    rename[gc.id] = id;
    out.classes.push_back({id, gc.colour});
  }
  for (const auto& ge : g.green_edges)
    out.green_edges.push_back({ge.tail + shift, ge.head + shift, rename.at(ge.cls)});
  for (const auto& [v, lab] : g.labels) out.labels[v + shift] = lab;
  if (g.kind == GraphKind::Pvebg) out.kind = GraphKind::Pvebg;
  return shift;
}

std::string eps_name(const std::string& prefix, int k) {
  return prefix + "eps" + std::to_string(k);
}

// One ring component A_j appended to g. Classes eps{j-1}, eps{j} carry the
// even and odd zigzag steps; the diagonal class forces the two red seed steps
// into them. Copies j >= 2 get the anti-coincidence vertex a_{j,2N+1} whose
// green edge pins it one eps^{j-2} step away from a_{j,1}.
void build_A_component(Graph& g, GadgetHandles& handles, int j, int N, const std::string& px,
                       const std::string& hpx, const std::string& label_suffix) {
  auto key = [&](int i) { return hpx + "a" + std::to_string(j) + "." + std::to_string(i); };
  auto label = [&](int i) {
    return "a_{" + std::to_string(j) + "," + std::to_string(i) + "}" + label_suffix;
  };
  std::vector<int> a(2 * N + 2, -1);
  for (int i = 0; i <= 2 * N; ++i) {
    a[i] = g.add_vertex(label(i));
    handles[key(i)] = a[i];
  }
  g.add_edge(Colour::Red, a[0], a[1]);
  g.add_edge(Colour::Red, a[1], a[2]);
  g.add_edge(Colour::Blue, a[0], a[2 * N]);
  g.add_class(eps_name(px, j - 1), Colour::Red);
  g.add_class(eps_name(px, j), Colour::Red);
  for (int i = 2; i <= 2 * N - 1; ++i)
    g.add_green(a[i], a[i + 1], eps_name(px, i % 2 == 0 ? j - 1 : j));
  std::string diag = px + "diag" + std::to_string(j);
  g.add_class(diag, Colour::Red);
  g.add_green(a[0], a[2], diag);
  g.add_green(a[1], a[3], diag);
  g.add_green(a[2], a[4], diag);
  if (j >= 2) {
    int extra = g.add_vertex(label(2 * N + 1));
    handles[key(2 * N + 1)] = extra;
    g.add_green(a[1], extra, eps_name(px, j - 2));
  }
}

void build_A_into(Graph& g, GadgetHandles& handles, int deg, int N, const std::string& px,
                  const std::string& hpx, const std::string& label_suffix) {
  if (deg < 2 || deg % 2 != 0) throw Error("build_A: deg(p) must be even and at least 2");
  if (N < 2 || N % 2 != 0) throw Error("build_A: N must be even and at least 2");
  for (int j = 1; j <= deg; ++j) build_A_component(g, handles, j, N, px, hpx, label_suffix);
}

// A green path of sum(multiplicities) edges; run t uses class names[t].
// Returns (first, last) vertices.
std::pair<int, int> build_step_path(Graph& g, GadgetHandles& handles, const std::string& bname,
                                    const std::vector<std::pair<Int, std::string>>& runs) {
  long total = 0;
  for (const auto& [m, cls] : runs) total += m.get_si();
  assert(total >= 1);
  std::vector<int> verts;
  for (long t = 0; t <= total; ++t) {
    int v = g.add_vertex("b_{" + bname + "," + std::to_string(t) + "}");
    handles["b" + bname + "." + std::to_string(t)] = v;
    verts.push_back(v);
  }
  long at = 0;
  for (const auto& [m, cls] : runs) {
    for (long s = 0; s < m.get_si(); ++s) {
      g.add_green(verts[at], verts[at + 1], cls);
      ++at;
    }
  }
  return {verts.front(), verts.back()};
}

// Tie partner green edges to the whole-path vector. Paths of length one reuse
// their single step class directly (a fresh span edge would double up on the
// same vertex pair).
void tie_span(Graph& g, std::pair<int, int> path_ends, long path_len,
              const std::string& span_cls, const std::string& single_step_cls,
              const std::vector<std::pair<int, int>>& partners, std::string* used = nullptr) {
  std::string cls;
  if (path_len == 1) {
    cls = single_step_cls;
  } else {
    cls = span_cls;
    g.add_class(span_cls, Colour::Red);
    g.add_green(path_ends.first, path_ends.second, span_cls);
  }
  for (auto [t, h] : partners) g.add_green(t, h, cls);
  if (used) *used = cls;
}

long isum(const std::vector<Int>& v, int parity) {
  long s = 0;
  for (size_t k = 0; k < v.size(); ++k)
    if (static_cast<int>(k % 2) == parity) s += v[k].get_si();
  return s;
}

std::vector<std::pair<Int, std::string>> runs_of(const std::vector<Int>& coef, int parity,
                                                 const Int& mult, const std::string& px) {
  std::vector<std::pair<Int, std::string>> runs;
  for (size_t k = 0; k < coef.size(); ++k)
    if (static_cast<int>(k % 2) == parity && coef[k] > 0)
      runs.push_back({coef[k] * mult, eps_name(px, static_cast<int>(k))});
  return runs;
}

struct BWiring {
  std::string side_pp_1;  // class carrying vec(b10.0 -> b10.1), for G'
};

// Graph B appended to g; step classes come from the three A copies through
// px1/px2/px3 (which must already be declared).
BWiring build_B_into(Graph& g, GadgetHandles& handles, const std::vector<Int>& beta,
                     const std::vector<Int>& gamma, int which_case, const std::string& px1,
                     const std::string& px2, const std::string& px3, const std::string& spx) {
  const int degqp = static_cast<int>(beta.size()) - 1;
  const int degqn = static_cast<int>(gamma.size()) - 1;
  if (which_case == 1) {
    if (!(degqp == 0 && degqn >= 2)) throw CaseMismatch("case 1 needs deg(q_p)=0, deg(q_n)>=2");
  } else if (which_case == 2) {
    if (!(degqp >= 2 && degqn >= 2)) throw CaseMismatch("case 2 needs deg(q_p)>=2, deg(q_n)>=2");
  } else {
    throw CaseMismatch("case must be 1 or 2");
  }

  BWiring wiring;
  auto triangle = [&](const std::string& bname) {
    std::array<int, 3> v{};
    for (int t = 0; t < 3; ++t) {
      v[t] = g.add_vertex("b_{" + bname + "," + std::to_string(t) + "}");
      handles["b" + bname + "." + std::to_string(t)] = v[t];
    }
    return v;
  };

  auto b1 = build_step_path(g, handles, "1", runs_of(beta, 0, Int(1), px1));
  long b1_len = isum(beta, 0);
  std::pair<int, int> b2{-1, -1};
  long b2_len = 0;
  if (which_case == 2) {
    b2 = build_step_path(g, handles, "2", runs_of(beta, 1, Int(1), px1));
    b2_len = isum(beta, 1);
  }
  auto b4 = build_step_path(g, handles, "4", runs_of(beta, 0, Int(1), px2));
  std::pair<int, int> b5{-1, -1};
  if (which_case == 2) b5 = build_step_path(g, handles, "5", runs_of(beta, 1, Int(1), px2));
  auto b7 = build_step_path(g, handles, "7", runs_of(gamma, 0, Int(2), px3));
  auto b8 = build_step_path(g, handles, "8", runs_of(gamma, 1, Int(2), px3));
  long b7_len = 2 * isum(gamma, 0), b8_len = 2 * isum(gamma, 1);

  auto b9 = triangle("9");
  auto b10 = triangle("10");

  if (which_case == 1) {
    tie_span(g, b1, b1_len, spx + "side_pp_1", eps_name(px1, 0), {{b10[0], b10[1]}},
             &wiring.side_pp_1);
    tie_span(g, b4, b1_len, spx + "side_pp_2", eps_name(px2, 0), {{b10[1], b10[2]}});
  } else {
    auto b3 = triangle("3");
    auto b6 = triangle("6");
    tie_span(g, b1, b1_len, spx + "qp_even_1", eps_name(px1, 0), {{b3[0], b3[1]}});
    tie_span(g, b2, b2_len, spx + "qp_odd_1", eps_name(px1, 1), {{b3[1], b3[2]}});
    g.add_class(spx + "side_pp_1", Colour::Red);
    g.add_green(b3[0], b3[2], spx + "side_pp_1");
    g.add_green(b10[0], b10[1], spx + "side_pp_1");
    wiring.side_pp_1 = spx + "side_pp_1";
    tie_span(g, b4, b1_len, spx + "qp_even_2", eps_name(px2, 0), {{b6[0], b6[1]}});
    tie_span(g, b5, b2_len, spx + "qp_odd_2", eps_name(px2, 1), {{b6[1], b6[2]}});
    g.add_class(spx + "side_pp_2", Colour::Red);
    g.add_green(b6[0], b6[2], spx + "side_pp_2");
    g.add_green(b10[1], b10[2], spx + "side_pp_2");
  }
  tie_span(g, b7, b7_len, spx + "qn_even", eps_name(px3, 0), {{b9[0], b9[1]}});
  tie_span(g, b8, b8_len, spx + "qn_odd", eps_name(px3, 1), {{b9[1], b9[2]}});
  g.add_class(spx + "side_pn", Colour::Red);
  g.add_green(b9[0], b9[2], spx + "side_pn");
  g.add_green(b10[0], b10[2], spx + "side_pn");
  return wiring;
}

Graph red_k4() {
  Graph g;
  g.num_vertices = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(Colour::Red, u, v);
  g.normalize();
  return g;
}

bool has_positive_root(const IntPoly& p) {
  for (const auto& r : isolate_real_roots(p))
    if (r.compare(Rat(0)) > 0) return true;
  return false;
}

BuiltG build_G_impl(const IntPoly& p, bool strict) {
  if (!p.is_even() || p.is_zero() || p.leading() >= 0)
    throw std::invalid_argument("build_G: p must be even with a negative leading coefficient");
  BuiltG out;
  out.prov.p = p;
  if (p.degree() < 2 || !has_positive_root(p)) {
    // S_0 and S_1 are empty (p < 0 throughout R_{>0}): a red K4 does it.
    out.graph = red_k4();
    out.prov.trivial_empty = true;
    return out;
  }
  EpsilonSystem sys = make_epsilon_system(p);
  out.prov.N = sys.N;
  out.prov.beta = sys.beta;
  out.prov.gamma = sys.gamma;
  out.prov.which_case = sys.pp.degree() == 0 ? 1 : 2;

  Graph& g = out.graph;
  for (int copy = 1; copy <= 3; ++copy) {
    std::string px = "c" + std::to_string(copy) + ".";
    std::string sup = "^{(" + std::to_string(copy) + ")}";
    build_A_into(g, out.handles, sys.deg, sys.N, px, px, sup);
  }
  BWiring wiring =
      build_B_into(g, out.handles, sys.beta, sys.gamma, out.prov.which_case, "c1.", "c2.", "c3.", "B.");

  if (strict) {
    int b103 = g.add_vertex("b_{10,3}");
    out.handles["b10.3"] = b103;
    g.add_green(b103, out.handles.at("b10.2"), wiring.side_pp_1);
  }

  // Coarse but documented bounds backing the finite-W claim.
  auto M = max_root(p);
  double m_up = M ? M->to_double() + 1.0 : 1.0;
  long spans = isum(sys.beta, 0) + isum(sys.beta, 1) + 2 * (isum(sys.gamma, 0) + isum(sys.gamma, 1));
  out.prov.diameter_bound = 2.0 * spans + 2.0 * sys.N + 2.0;
  out.prov.W = static_cast<long>(std::ceil(2.0 * (1.0 + m_up) + 2.0) *
                                 std::max(1.0, std::ceil(out.prov.diameter_bound)));
  g.normalize();
  return out;
}

}  // namespace

BuiltGadget build_A(const IntPoly& p, int N) {
  BuiltGadget out;
  int deg = p.degree();
  build_A_into(out.graph, out.handles, deg, N, "", "", "");
  out.graph.normalize();
  return out;
}

BuiltGadget build_B(const std::vector<Int>& beta, const std::vector<Int>& gamma, int which_case) {
  BuiltGadget out;
  int top = static_cast<int>(std::max(beta.size(), gamma.size())) - 1;
  for (int k = 0; k <= top; ++k) out.graph.add_class(eps_name("", k), Colour::Red);
  build_B_into(out.graph, out.handles, beta, gamma, which_case, "", "", "", "B.");
  // Standalone B: the eps classes exist only through the path steps here.
  out.graph.normalize();
  return out;
}

BuiltG build_G(const IntPoly& p) { return build_G_impl(p, false); }
BuiltG build_G_strict(const IntPoly& p) { return build_G_impl(p, true); }

namespace {

struct CHandles {
  std::pair<int, int> theta1, theta2;
};

CHandles build_C_into(Graph& g, long r, const std::string& px) {
  assert(r >= 2);
  const int R2 = static_cast<int>(2 * r);
  auto lbl = [&](const std::string& s) { return px.empty() ? s : px + s; };

  for (const char* name : {"g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8",
                           "t1", "t2", "t3", "t7", "t8"})
    g.add_class(px + name, Colour::Red);

  // --- C_1: the rigid frame.
  std::vector<int> bot1(R2 + 1), upL(R2 + 1), star(R2 + 2);
  for (int i = 0; i <= R2; ++i) bot1[i] = g.add_vertex(lbl("c1_" + std::to_string(i)));
  for (int k = 1; k <= R2; ++k) upL[k] = g.add_vertex(lbl("c1_-" + std::to_string(k)));
  for (int k = 1; k <= R2 + 1; ++k) star[k] = g.add_vertex(lbl("c1_" + std::to_string(k) + "*"));
  int m1 = g.add_vertex(lbl("c1_-1*"));
  int m2 = g.add_vertex(lbl("c1_-2*"));
  int m3 = g.add_vertex(lbl("c1_" + std::to_string(R2 + 2) + "*"));

  g.add_edge(Colour::Red, bot1[0], bot1[1]);
  g.add_edge(Colour::Red, bot1[0], star[1]);
  g.add_edge(Colour::Red, bot1[1], star[1]);
  g.add_edge(Colour::Red, star[1], upL[1]);
  g.add_edge(Colour::Red, upL[1], bot1[0]);

  for (int i = 1; i <= R2 - 1; ++i) g.add_green(bot1[i], bot1[i + 1], px + "g1");
  g.add_green(m1, m2, px + "g1");
  for (int k = 1; k <= R2; ++k) g.add_green(star[k], star[k + 1], px + "g2");
  g.add_green(m1, bot1[0], px + "g2");
  for (int k = 2; k <= R2; ++k) g.add_green(upL[k], upL[k - 1], px + "g3");
  g.add_green(star[R2 + 1], m3, px + "g3");
  g.add_green(bot1[0], bot1[2], px + "t1");
  g.add_green(bot1[1], bot1[3], px + "t1");
  g.add_green(bot1[0], star[2], px + "t2");
  g.add_green(star[1], star[3], px + "t2");
  g.add_green(upL[2], bot1[0], px + "t3");
  g.add_green(upL[3], upL[1], px + "t3");
  g.add_green(m2, bot1[R2], px + "g4");
  g.add_green(bot1[R2], m3, px + "g5");
  g.add_green(upL[R2], star[R2 + 1], px + "g6");

  // --- C_2: the switch.
  auto bot2_lbl = [&](int i) { return lbl("c2_" + std::to_string(i)); };
  std::vector<int> bot2(2 * R2 + 1);
  for (int i = -R2; i <= R2; ++i) bot2[i + R2] = g.add_vertex(bot2_lbl(i));
  auto B2 = [&](int i) { return bot2[i + R2]; };
  std::vector<int> sp(R2 + 2), sm(R2 + 2), pp(R2 + 1), pm(R2 + 1);
  for (int k = 1; k <= R2 + 1; ++k) sp[k] = g.add_vertex(lbl("c2_" + std::to_string(k) + "*"));
  for (int k = 1; k <= R2 + 1; ++k) sm[k] = g.add_vertex(lbl("c2_-" + std::to_string(k) + "*"));
  for (int k = 1; k <= R2; ++k) pp[k] = g.add_vertex(lbl("c2_" + std::to_string(k) + "'"));
  for (int k = 1; k <= R2; ++k) pm[k] = g.add_vertex(lbl("c2_-" + std::to_string(k) + "'"));

  g.add_edge(Colour::Red, B2(0), B2(1));
  g.add_edge(Colour::Red, B2(-1), B2(0));
  g.add_edge(Colour::Red, B2(0), sp[1]);
  for (int k = 1; k <= R2; ++k) g.add_edge(Colour::Red, sp[k], sp[k + 1]);
  g.add_edge(Colour::Red, B2(0), sm[1]);
  for (int k = 1; k <= R2; ++k) g.add_edge(Colour::Red, sm[k], sm[k + 1]);
  g.add_edge(Colour::Red, B2(1), pp[1]);
  for (int k = 1; k <= R2 - 1; ++k) g.add_edge(Colour::Red, pp[k], pp[k + 1]);
  g.add_edge(Colour::Red, B2(1), pm[1]);
  for (int k = 1; k <= R2 - 1; ++k) g.add_edge(Colour::Red, pm[k], pm[k + 1]);

  for (int k = 2; k <= R2; ++k) g.add_green(B2(-k), B2(-k + 1), px + "g7");
  for (int i = 1; i <= R2 - 1; ++i) g.add_green(B2(i), B2(i + 1), px + "g8");
  g.add_green(B2(-2), B2(0), px + "t7");
  g.add_green(B2(-3), B2(-1), px + "t7");
  g.add_green(B2(0), B2(2), px + "t8");
  g.add_green(B2(1), B2(3), px + "t8");

  g.add_green(sm[R2 + 1], pm[R2], px + "g1");
  g.add_green(pm[R2], B2(R2), px + "g4");
  g.add_green(B2(R2), pp[R2], px + "g5");
  g.add_green(sp[R2 + 1], pp[R2], px + "g3");
  g.add_green(B2(-R2), sp[R2 + 1], px + "g6");

  CHandles h;
  h.theta1 = {sp[static_cast<int>(r)], pp[static_cast<int>(r)]};
  h.theta2 = {sm[static_cast<int>(r)], pm[static_cast<int>(r)]};
  return h;
}

long switch_r(const Rat& L, const Rat& U) {
  Rat q = U / (L * 2);
  long r = rat_ceil(q).get_si() + 1;
  return std::max<long>(r, 2);
}

// The paper's switch: one C copy per (red edge of gside, red edge of dside)
// pair; both sides lose their red edges, whose endpoint pairs are green-tied
// to the matching vartheta handles instead.
Graph make_switch(const Graph& gside, const Graph& dside, const Rat& L, const Rat& U,
                  const std::string& px) {
  long r = switch_r(L, U);
  Graph out;
  Graph gs = gside;
  gs.normalize();
  Graph ds = dside;
  ds.normalize();
  std::vector<VertexPair> g_red = gs.red_edges;
  std::vector<VertexPair> d_red = ds.red_edges;
  if (g_red.empty()) throw Error("make_switch: the clamped graph needs at least one red edge");
  gs.red_edges.clear();
  ds.red_edges.clear();
  int g_off = append_graph(out, gs);
  int d_off = append_graph(out, ds);

  const long nG = static_cast<long>(g_red.size());
  const long nD = static_cast<long>(d_red.size());
  std::vector<std::vector<CHandles>> ch(nG, std::vector<CHandles>(nD));
  std::vector<std::vector<int>> coff(nG, std::vector<int>(nD));
  for (long i = 0; i < nG; ++i)
    for (long j = 0; j < nD; ++j) {
      Graph cg;
      std::string cpx = px + "C" + std::to_string(i) + "_" + std::to_string(j) + ".";
      CHandles h = build_C_into(cg, r, cpx);
      int off = append_graph(out, cg);
      h.theta1.first += off;
      h.theta1.second += off;
      h.theta2.first += off;
      h.theta2.second += off;
      ch[i][j] = h;
      coff[i][j] = off;
    }
  for (long i = 0; i < nG; ++i) {
    std::string cls = px + "th1_" + std::to_string(i);
    while (out.has_class(cls)) cls += "'";
    out.add_class(cls, Colour::Red);
    out.add_green(g_red[i].first + g_off, g_red[i].second + g_off, cls);
    for (long j = 0; j < nD; ++j) out.add_green(ch[i][j].theta1.first, ch[i][j].theta1.second, cls);
  }
  for (long j = 0; j < nD; ++j) {
    std::string cls = px + "th2_" + std::to_string(j);
    while (out.has_class(cls)) cls += "'";
    out.add_class(cls, Colour::Red);
    out.add_green(d_red[j].first + d_off, d_red[j].second + d_off, cls);
    for (long i = 0; i < nG; ++i) out.add_green(ch[i][j].theta2.first, ch[i][j].theta2.second, cls);
  }
  out.normalize();
  return out;
}

// Red L1-path against a green L2-path pinned to step length d (the pin is a
// parallelogram against one blue edge). Range (0, L1/L2] for L1 >= 2.
Graph ratio_literal(long L1, long L2) {
  Graph g;
  std::vector<int> w(L2 + 1);
  for (long i = 0; i <= L2; ++i) w[i] = g.add_vertex("w" + std::to_string(i));
  if (L1 >= 2 || L2 >= 2) {
    g.add_class("ratio", Colour::Blue);
    for (long i = 0; i < L2; ++i) g.add_green(w[i], w[i + 1], "ratio");
  }
  int prev = w[0];
  for (long s = 1; s < L1; ++s) {
    int v = g.add_vertex("r" + std::to_string(s));
    g.add_edge(Colour::Red, prev, v);
    prev = v;
  }
  g.add_edge(Colour::Red, prev, w[L2]);
  int x = g.add_vertex("x");
  int y = g.add_vertex("y");
  g.add_edge(Colour::Blue, x, y);
  g.add_class("pin", Colour::Blue);
  g.add_green(x, w[L2 - 1], "pin");
  g.add_green(y, w[L2], "pin");
  g.normalize();
  return g;
}

// Red edge straight across the pinned green path: the single point {L1/L2}.
Graph ratio_point(long L2) {
  Graph g;
  std::vector<int> w(L2 + 1);
  for (long i = 0; i <= L2; ++i) w[i] = g.add_vertex("w" + std::to_string(i));
  if (L2 >= 2) {
    g.add_class("ratio", Colour::Blue);
    for (long i = 0; i < L2; ++i) g.add_green(w[i], w[i + 1], "ratio");
  }
  g.add_edge(Colour::Red, w[0], w[L2]);
  int x = g.add_vertex("x");
  int y = g.add_vertex("y");
  g.add_edge(Colour::Blue, x, y);
  g.add_class("pin", Colour::Blue);
  g.add_green(x, w[L2 - 1], "pin");
  g.add_green(y, w[L2], "pin");
  g.normalize();
  return g;
}

}  // namespace

SwitchGadget build_C(const Rat& L, const Rat& U) {
  if (!(L > 0 && L <= U)) throw std::invalid_argument("build_C: need 0 < L <= U");
  SwitchGadget out;
  out.r = switch_r(L, U);
  CHandles h = build_C_into(out.graph, out.r, "");
  out.theta1 = h.theta1;
  out.theta2 = h.theta2;
  out.graph.normalize();
  return out;
}

RatioGadget build_D(long L1, long L2) {
  if (L1 <= 0 || L2 <= 0) throw std::invalid_argument("build_D: sides must be positive");
  if (std::gcd(L1, L2) != 1) throw NotCoprime("build_D: L1 and L2 must be coprime");
  RatioGadget out;
  out.L1 = L1;
  out.L2 = L2;
  if (L1 >= 2) {
    out.graph = ratio_literal(L1, L2);
    return out;
  }
  // L1 == 1: a unit red edge over the pinned path has no slack, so the plain
  // gadget realizes only {L}. Recover (0, L] as {L} from the point gadget
  // plus (0, L) from a doubled (non-coprime) companion, joined by a switch.
  Rat L = make_rat(L1, L2);
  Rat U = L * 2;  // reach only needs the doubled companion, r stays at 2
  Graph point = ratio_point(L2);
  Graph open_part = ratio_literal(2, 2 * L2);
  out.graph = make_switch(point, open_part, L, U, "dsw.");
  return out;
}

Graph clamp_range(const Graph& g, const Rat& L, const Rat& U) {
  if (!(L > 0 && L <= U)) throw std::invalid_argument("clamp_range: need 0 < L <= U");
  Graph base = g;
  if (base.red_edges.empty()) {
    // The switch needs red edges to act on; a lone red edge is range-neutral.
    Graph stub;
    stub.num_vertices = 2;
    stub.add_edge(Colour::Red, 0, 1);
    base = disjoint_union(base, stub);
  }
  long L1 = L.get_num().get_si(), L2 = L.get_den().get_si();
  if (L1 >= 2) return make_switch(base, ratio_literal(L1, L2), L, U, "cl.");
  Graph h1 = make_switch(base, ratio_point(L2), L, U, "cl1.");
  return make_switch(h1, ratio_literal(2, 2 * L2), L, U, "cl2.");
}

Graph window_range(const Graph& g, const Rat& La, const Rat& Ua, const Rat& Lb, const Rat& Ub) {
  if (!(Lb < La && La < Ua && Ua < Ub)) throw std::invalid_argument("window_range: need Lb < La < Ua < Ub");
  if (!(Lb > 0)) throw std::invalid_argument("window_range: Lb must be positive");
  Graph h1 = clamp_range(invert_colours(g), 1 / Ua, 1 / Lb);
  return clamp_range(invert_colours(h1), La, Ub);
}

SynthResult synthesize(const SemialgebraicSet& sigma, const Rat& lambda, const Rat& upsilon) {
  SynthResult out;
  out.prov.source_set = sigma.to_string();
  if (sigma.empty()) {
    Graph k4 = red_k4();
    Graph blue;
    blue.num_vertices = 2;
    blue.add_edge(Colour::Blue, 0, 1);
    out.graph = disjoint_union(k4, blue);
    return out;
  }
  auto terms = decompose(sigma, lambda, upsilon);
  const size_t n = terms.size() - 1;

  // The window bounds: strictly below every L_i and above every U_i so the
  // final gap term's range stays inside the windows where the per-term
  // identities hold.
  Rat lam_w = terms[0].L, ups_w = terms[0].U;
  for (size_t i = 0; i < n; ++i) {
    lam_w = std::min(lam_w, terms[i].L);
    ups_w = std::max(ups_w, terms[i].U);
  }
  lam_w = lam_w * make_rat(9, 10);
  ups_w = ups_w * make_rat(11, 10);
  out.prov.lambda_window = rat_to_string(lam_w);
  out.prov.upsilon_window = rat_to_string(ups_w);

  Graph total;
  long maxW = 1;
  for (size_t i = 0; i < terms.size(); ++i) {
    const DecompTerm& t = terms[i];
    bool last = (i == n);
    BuiltG built = (t.zeta == 0 && !last) ? build_G(t.p) : build_G_strict(t.p);
    SynthProvenance::Term pt;
    for (const auto& c : t.p.coeffs()) pt.p_coeffs.push_back(c.get_str());
    pt.L = rat_to_string(t.L);
    pt.U = t.U_infinite ? "inf" : rat_to_string(t.U);
    pt.U_infinite = t.U_infinite;
    pt.zeta = t.zeta;
    pt.g = built.prov;
    Graph term_graph = built.graph;
    if (!last && !built.prov.trivial_empty) {
      term_graph = window_range(term_graph, t.L, t.U, lam_w, ups_w);
      pt.windowed = true;
    }
    maxW = std::max(maxW, built.prov.W);
    out.prov.terms.push_back(std::move(pt));
    total = disjoint_union(total, term_graph);
  }
  out.prov.W = maxW;
  out.graph = total;
  return out;
}

std::string provenance_to_json(const SynthProvenance& prov) {
  nlohmann::ordered_json j;
  j["source_set"] = prov.source_set;
  j["lambda_window"] = prov.lambda_window;
  j["upsilon_window"] = prov.upsilon_window;
  j["W"] = prov.W;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : prov.terms) {
    nlohmann::ordered_json jt;
    jt["p"] = t.p_coeffs;
    jt["L"] = t.L;
    jt["U"] = t.U;
    jt["zeta"] = t.zeta;
    jt["windowed"] = t.windowed;
    jt["trivial_empty"] = t.g.trivial_empty;
    jt["N"] = t.g.N;
    jt["case"] = t.g.which_case;
    nlohmann::ordered_json beta = nlohmann::ordered_json::array();
    for (const auto& b : t.g.beta) beta.push_back(b.get_str());
    jt["beta"] = beta;
    nlohmann::ordered_json gamma = nlohmann::ordered_json::array();
    for (const auto& c : t.g.gamma) gamma.push_back(c.get_str());
    jt["gamma"] = gamma;
    jt["W"] = t.g.W;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  return j.dump() + "\n";
}

}  // namespace twodist
