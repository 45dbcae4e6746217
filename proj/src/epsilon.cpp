#include "twodist/epsilon.hpp"

#include <cassert>
#include <cmath>

#include "twodist/errors.hpp"

namespace twodist {

std::pair<IntPoly, IntPoly> split_pos_neg(const IntPoly& p) {
  if (!p.is_even()) throw std::invalid_argument("split_pos_neg: p must be even");
  std::vector<Int> pos(p.coeffs().size(), Int(0)), neg(p.coeffs().size(), Int(0));
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    const Int& c = p.coeffs()[k];
    if (c > 0) pos[k] = c;
    else neg[k] = -c;
  }
  return {IntPoly(std::move(pos)), IntPoly(std::move(neg))};
}

// Chebyshev polynomial of the first kind, T_m.
static IntPoly chebyshev_T(int m) {
  IntPoly t0 = IntPoly::of({1});
  IntPoly t1 = IntPoly::of({0, 1});
  if (m == 0) return t0;
  IntPoly two_x = IntPoly::of({0, 2});
  for (int i = 2; i <= m; ++i) {
    IntPoly t2 = two_x * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

// sin(pi / (2k)) as an algebraic number: it is a root of T_{2k}(x) - (-1)^{k-1}
// (since sin(pi/2k) = cos(pi (k-1) / 2k)).
static AlgebraicNumber sin_pi_over(int twok) {
  assert(twok >= 2 && twok % 2 == 0);
  int k = twok / 2;
  double approx = std::sin(M_PI / twok);
  IntPoly q = chebyshev_T(twok) - IntPoly::constant((k - 1) % 2 == 0 ? Int(1) : Int(-1));
  IntPoly s = q.squarefree_part();
  // Bracket the numeric value, tightening until the interval isolates it.
  for (long denom = 64;; denom *= 4) {
    Rat lo(static_cast<long>(std::floor(approx * denom)) - 1, denom);
    Rat hi(static_cast<long>(std::ceil(approx * denom)) + 1, denom);
    lo.canonicalize();
    hi.canonicalize();
    try {
      return AlgebraicNumber(s, lo, hi);
    } catch (const std::invalid_argument&) {
      if (denom > (1L << 40)) throw;
    }
  }
}

int choose_N(const IntPoly& p) {
  if (!p.is_even() || p.is_zero() || p.leading() >= 0 || p.degree() < 2)
    throw std::invalid_argument("choose_N: p must be even of degree >= 2 with negative lead");
  auto roots = isolate_real_roots(p);
  std::optional<AlgebraicNumber> M;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    if (it->compare(Rat(0)) > 0) {
      M = *it;
      break;
    }
  }
  if (!M) throw NoPositiveRoot("choose_N: p has no positive real root");

  AlgebraicNumber s = sin_pi_over(2 * p.degree());
  // Smallest even N with 2N sin(pi/(2 deg)) > M. The scaled value 2N*s is a
  // root of q(x / 2N) cleared of denominators.
  for (int N = 2;; N += 2) {
    const IntPoly& sq = s.minpoly();
    Int twoN(2 * N);
    std::vector<Int> scaled(sq.coeffs().size());
    for (size_t j = 0; j < sq.coeffs().size(); ++j) {
      Int f(1);
      for (size_t t = j + 1; t < sq.coeffs().size(); ++t) f *= twoN;
      scaled[j] = sq.coeffs()[j] * f;
    }
    AlgebraicNumber twoNs(IntPoly(std::move(scaled)), s.lo() * Rat(2 * N), s.hi() * Rat(2 * N));
    if (M->compare(twoNs) < 0) return N;
  }
}

std::complex<double> epsilon_of_d(int N, double d) {
  if (!(d > 0) || d >= 2.0 * N) throw OutOfRange("epsilon_of_d: need 0 < d < 2N");
  double c = d * d / (2.0 * N * N) - 1.0;
  if (c < -1.0) c = -1.0;
  if (c > 1.0) c = 1.0;
  double theta = std::acos(c);  // in (0, pi): positive imaginary part
  return {std::cos(theta), std::sin(theta)};
}

static Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

static std::vector<Int> expand_part(const IntPoly& part, int N) {
  // part has nonnegative coefficients and even support; expand
  // sum_i c_{2i} d^{2i} eps^{D/2} with d^{2i} eps^i = N^{2i} (1+eps)^{2i}.
  int D = part.degree();
  assert(D % 2 == 0);
  std::vector<Int> out(D + 1, Int(0));
  for (int i = 0; 2 * i <= D; ++i) {
    const Int c = part.coeff(2 * i);
    if (c == 0) continue;
    Int scale = c;
    for (int t = 0; t < 2 * i; ++t) scale *= N;
    // N^{2i} (1+eps)^{2i} eps^{D/2 - i}: exponent k = D/2 - i + j
    for (int j = 0; j <= 2 * i; ++j) {
      int k = D / 2 - i + j;
      out[k] += scale * binomial(2 * i, j);
    }
  }
  return out;
}

std::pair<std::vector<Int>, std::vector<Int>> qp_qn_coefficients(const IntPoly& p, int N) {
  auto [pp, pn] = split_pos_neg(p);
  if (pp.is_zero() || pn.is_zero())
    throw std::invalid_argument("qp_qn_coefficients: p needs terms of both signs");
  return {expand_part(pp, N), expand_part(pn, N)};
}

EpsilonSystem make_epsilon_system(const IntPoly& p) {
  EpsilonSystem sys;
  sys.p = p;
  sys.deg = p.degree();
  sys.N = choose_N(p);
  std::tie(sys.pp, sys.pn) = split_pos_neg(p);
  std::tie(sys.beta, sys.gamma) = qp_qn_coefficients(p, sys.N);
  for (const auto& b : sys.beta) assert(b > 0);
  for (const auto& g : sys.gamma) assert(g > 0);
  return sys;
}

Rat abs_squared_eps_poly(const std::vector<Int>& coeffs, int N, const Rat& d) {
  // |sum c_k eps^k|^2 = sum_{j,k} c_j c_k cos((j-k) theta), cos theta rational.
  Rat ct = d * d / Rat(2 * N * N) - 1;
  int m = static_cast<int>(coeffs.size());
  std::vector<Rat> cos_m(m, Rat(0));  // cos(t * theta) via Chebyshev recurrence
  cos_m[0] = 1;
  if (m > 1) cos_m[1] = ct;
  for (int t = 2; t < m; ++t) cos_m[t] = Rat(2) * ct * cos_m[t - 1] - cos_m[t - 2];
  Rat total(0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      int diff = j >= k ? j - k : k - j;
      total += Rat(coeffs[j]) * Rat(coeffs[k]) * cos_m[diff];
    }
  return total;
}

}  // namespace twodist
