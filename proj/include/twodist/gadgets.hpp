#pragma once

#include <map>
#include <string>
#include <vector>

#include "twodist/decompose.hpp"
#include "twodist/epsilon.hpp"
#include "twodist/graph.hpp"

namespace twodist {

// Named vertex handles into a constructed gadget ("a1.3" for a_{1,3},
// "b10.2" for b_{10,2}, with an optional copy prefix like "c2:a1.3").
using GadgetHandles = std::map<std::string, int>;

struct BuiltGadget {
  Graph graph;
  GadgetHandles handles;
};

// Gadget A: deg(p) ring components transporting powers of eps along shared
// green classes "eps0".."eps<deg>". Includes the blue closing edges that pin
// |N(1 + eps)| = d.
BuiltGadget build_A(const IntPoly& p, int N);

// Graph B alone (its steps reference classes "eps<k>"); case 1 needs
// deg(q_p) = 0, case 2 needs deg(q_p) >= 2.
BuiltGadget build_B(const std::vector<Int>& beta, const std::vector<Int>& gamma, int which_case);

struct GProvenance {
  IntPoly p;
  bool trivial_empty = false;  // red K4 shortcut
  int N = 0;
  int which_case = 0;
  std::vector<Int> beta, gamma;
  long W = 0;  // finite witness for ran_W = ran
  double diameter_bound = 0;
};

struct BuiltG {
  Graph graph;
  GadgetHandles handles;
  GProvenance prov;
};

// Range S_0(p, 0, +inf); red K4 when p has no positive real root.
BuiltG build_G(const IntPoly& p);
// Range S_1(p, 0, +inf); adds b_{10,3}.
BuiltG build_G_strict(const IntPoly& p);

struct SwitchGadget {
  Graph graph;
  long r = 0;
  std::pair<int, int> theta1;  // (tail, head) of the vartheta_1 handle
  std::pair<int, int> theta2;
};

// The on/off switch; r = ceil(U / 2L) + 1.
SwitchGadget build_C(const Rat& L, const Rat& U);

struct RatioGadget {
  Graph graph;
  long L1 = 0, L2 = 0;
};

// Range (0, L1/L2]; coprime L1, L2. For L1 == 1 the plain two-path gadget
// degenerates to the single point {L}, so the closed range is assembled from
// a point gadget and an open companion joined by a switch.
RatioGadget build_D(long L1, long L2);

// ran ~ ((0, L] united with ran(g)) truncated above U; see the switch lemma.
Graph clamp_range(const Graph& g, const Rat& L, const Rat& U);

// Compose clamps and colour inversions so that the range agrees with
// ((0,La] u ran(g) u [Ua,inf)) on the window (Lb, Ub).
Graph window_range(const Graph& g, const Rat& La, const Rat& Ua, const Rat& Lb, const Rat& Ub);

struct SynthProvenance {
  std::string source_set;
  struct Term {
    std::vector<std::string> p_coeffs;
    std::string L, U;
    bool U_infinite = false;
    int zeta = 0;
    bool windowed = false;
    GProvenance g;
  };
  std::vector<Term> terms;
  std::string lambda_window, upsilon_window;
  long W = 0;
};

struct SynthResult {
  Graph graph;
  SynthProvenance prov;
};

// The full pipeline: decompose sigma, build G / G' per term, window each
// term, and take the disjoint union. Empty sigma yields red K4 plus one blue
// edge (empty range).
SynthResult synthesize(const SemialgebraicSet& sigma, const Rat& lambda, const Rat& upsilon);

std::string provenance_to_json(const SynthProvenance& prov);

}  // namespace twodist
