#pragma once

#include <complex>
#include <vector>

#include "twodist/algebraic.hpp"

namespace twodist {

// The complex-encoding bundle behind gadgets A and B: p split into its
// positive and negated-negative parts, the ring size N, and the expansions
// q_p, q_n of p_p(d) eps^{D/2}, p_n(d) eps^{D'/2} as polynomials in eps.
struct EpsilonSystem {
  IntPoly p;
  IntPoly pp, pn;          // p = pp - pn, both with nonnegative coefficients
  int deg = 0;             // deg(p)
  int N = 0;               // even, N > M / (2 sin(pi / (2 deg)))
  std::vector<Int> beta;   // deg(pp) + 1 entries, all positive
  std::vector<Int> gamma;  // deg(pn) + 1 entries, all positive
};

// pp collects the positive coefficients, pn the negated negative ones.
std::pair<IntPoly, IntPoly> split_pos_neg(const IntPoly& p);

// Smallest even integer strictly above M / (2 sin(pi / (2 deg p))), decided
// exactly (sin(pi/2k) is algebraic, via Chebyshev polynomials).
// Throws NoPositiveRoot when p has no positive real root.
int choose_N(const IntPoly& p);

// Unit complex eps with positive imaginary part and |N(1+eps)| = d.
// Requires 0 < d < 2N.
std::complex<double> epsilon_of_d(int N, double d);

// Exact expansion coefficients of q_p and q_n (Lemma on positive
// coefficients): d^{2i} eps^{D/2} = N^{2i} (1+eps)^{2i} eps^{D/2-i}.
std::pair<std::vector<Int>, std::vector<Int>> qp_qn_coefficients(const IntPoly& p, int N);

EpsilonSystem make_epsilon_system(const IntPoly& p);

// |sum_k c_k eps(d)^k| computed exactly for rational d via Chebyshev cosines;
// used by tests and the acceptance suite.
Rat abs_squared_eps_poly(const std::vector<Int>& coeffs, int N, const Rat& d);

}  // namespace twodist
