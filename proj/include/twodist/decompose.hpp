#pragma once

#include <vector>

#include "twodist/semialgebraic.hpp"

namespace twodist {

// The six endpoint situations (left segment, the point itself, right segment;
// "in"/"out" relative to the set).
enum class EndpointType {
  T1,  // out, out, in
  T2,  // out, in,  out
  T3,  // out, in,  in
  T4,  // in,  out, out
  T5,  // in,  out, in
  T6   // in,  in,  out
};

// One S_zeta(p, L, U) factor. L == 0 encodes "no lower escape" (x <= 0 never
// holds on R_{>0}); U_infinite encodes U = +infinity.
struct DecompTerm {
  IntPoly p;  // even, negative leading coefficient
  Rat L;
  Rat U;                  // meaningful when !U_infinite
  bool U_infinite = false;
  int zeta = 0;  // 0: p >= 0, 1: p > 0
};

EndpointType classify_endpoint(const SemialgebraicSet& sigma, const AlgebraicNumber& rho,
                               const Endpoint& prev, const Endpoint& next);

// Table row of the construction: p_i and zeta_i from the endpoint type, the
// even polynomial omega vanishing simply at rho, and floor(rho).
std::pair<IntPoly, int> build_local_term(EndpointType t, const IntPoly& omega,
                                         const AlgebraicNumber& rho, const Int& floor_rho);

// Exact membership of x in S_zeta(p, L, U).
bool eval_S(const DecompTerm& term, const Rat& x);

// Full decomposition: n per-endpoint terms followed by the gap polynomial
// term (p_{n+1}, 0, +inf). Requires sigma nonempty and within [lambda,
// upsilon], 0 < lambda <= upsilon.
std::vector<DecompTerm> decompose(const SemialgebraicSet& sigma, const Rat& lambda,
                                  const Rat& upsilon);

}  // namespace twodist
