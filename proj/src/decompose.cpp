#include "twodist/decompose.hpp"

#include <algorithm>
#include <cassert>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

// A rational strictly between two algebraic numbers (refines both).
Rat rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  assert(a.compare(b) < 0);
  for (;;) {
    if (a.hi() < b.lo()) return simplest_rational_between(a.hi(), b.lo());
    a.refine();
    b.refine();
  }
}

}  // namespace

EndpointType classify_endpoint(const SemialgebraicSet& sigma, const AlgebraicNumber& rho,
                               const Endpoint& prev, const Endpoint& next) {
  if (rho.compare(Rat(0)) <= 0) throw NonNormalizedSet("endpoint must be positive");

  // Derive the (left segment, point, right segment) membership pattern from
  // the normalized interval list.
  bool left_in = false, point_in = false, right_in = false;
  bool seen = false;
  for (const auto& iv : sigma.intervals()) {
    bool is_lo = iv.lo.is_finite() && iv.lo.value.compare(rho) == 0;
    bool is_hi = iv.hi.is_finite() && iv.hi.value.compare(rho) == 0;
    if (is_lo && is_hi) {
      // One-point interval [rho, rho].
      point_in = true;
      seen = true;
      continue;
    }
    if (is_hi) {
      left_in = true;
      if (iv.hi.closed) point_in = true;
      seen = true;
    }
    if (is_lo) {
      right_in = true;
      if (iv.lo.closed) point_in = true;
      seen = true;
    }
  }
  if (!seen) throw NonNormalizedSet("rho is not an endpoint of the set");
  (void)prev;
  (void)next;

  if (!left_in && !point_in && right_in) return EndpointType::T1;
  if (!left_in && point_in && !right_in) return EndpointType::T2;
  if (!left_in && point_in && right_in) return EndpointType::T3;
  if (left_in && !point_in && !right_in) return EndpointType::T4;
  if (left_in && !point_in && right_in) return EndpointType::T5;
  if (left_in && point_in && !right_in) return EndpointType::T6;
  throw NonNormalizedSet("endpoint pattern impossible on a normalized set");
}

std::pair<IntPoly, int> build_local_term(EndpointType t, const IntPoly& omega,
                                         const AlgebraicNumber& rho, const Int& floor_rho) {
  int dsign = rho.sign_of(omega.derivative());
  if (dsign == 0) throw Error("build_local_term: omega'(rho) vanishes");

  Int bump = floor_rho + 1;
  IntPoly corr = IntPoly({-(bump * bump), Int(0), Int(1)});  // x^2 - (floor+1)^2
  IntPoly p;
  int zeta = 0;
  switch (t) {
    case EndpointType::T1:
      p = dsign > 0 ? (omega * corr).negate() : omega.negate();
      zeta = 1;
      break;
    case EndpointType::T2:
      p = (omega * omega).negate();
      zeta = 0;
      break;
    case EndpointType::T3:
      p = dsign > 0 ? (omega * corr).negate() : omega.negate();
      zeta = 0;
      break;
    case EndpointType::T4:
      p = dsign > 0 ? omega.negate() : (omega * corr).negate();
      zeta = 1;
      break;
    case EndpointType::T5:
      p = (omega * omega * corr).negate();
      zeta = 1;
      break;
    case EndpointType::T6:
      p = dsign > 0 ? omega.negate() : (omega * corr).negate();
      zeta = 0;
      break;
  }
  assert(p.leading() < 0);
  assert(p.is_even());
  return {p, zeta};
}

bool eval_S(const DecompTerm& term, const Rat& x) {
  if (x <= 0) throw std::invalid_argument("eval_S: x must be positive");
  if (term.L > 0 && x <= term.L) return true;
  if (!term.U_infinite && x >= term.U) return true;
  Rat v = term.p.eval(x);
  return term.zeta == 0 ? v >= 0 : v > 0;
}

std::vector<DecompTerm> decompose(const SemialgebraicSet& sigma, const Rat& lambda,
                                  const Rat& upsilon) {
  if (sigma.empty()) throw EmptySetError("decompose: empty set");
  if (!(lambda > 0 && lambda <= upsilon))
    throw std::invalid_argument("decompose: need 0 < lambda <= upsilon");
  if (!sigma.within(lambda, upsilon))
    throw std::invalid_argument("decompose: sigma not within [lambda, upsilon]");

  std::vector<AlgebraicNumber> rho = sigma.endpoint_values();
  const size_t n = rho.size();
  assert(n >= 1);

  // One separator rational per consecutive pair; windows stay on their own
  // side so that between-window gaps never collapse. The separator also
  // probes whether the open segment lies inside sigma.
  std::vector<Rat> sep(n >= 1 ? n - 1 : 0);
  std::vector<bool> gap_in(n >= 1 ? n - 1 : 0, false);
  for (size_t i = 0; i + 1 < n; ++i) {
    sep[i] = rational_between(rho[i], rho[i + 1]);
    gap_in[i] = sigma.contains(sep[i]);
  }

  std::vector<DecompTerm> terms;
  std::vector<Rat> Ls(n), Us(n);

  for (size_t i = 0; i < n; ++i) {
    Endpoint prev = i == 0 ? Endpoint::zero() : Endpoint::finite(rho[i - 1], false);
    Endpoint next = i + 1 < n ? Endpoint::finite(rho[i + 1], false) : Endpoint::infinity();
    EndpointType t = classify_endpoint(sigma, rho[i], prev, next);
    IntPoly omega = even_minimal_polynomial(rho[i]);
    auto [p, zeta] = build_local_term(t, omega, rho[i], rho[i].floor());

    // Neighbourhood N_i: clear of the other roots of p_i and of the
    // neighbouring rho's, respecting the separators.
    auto roots = isolate_real_roots(p);
    AlgebraicNumber lo_bound = i == 0 ? AlgebraicNumber(Rat(0)) : AlgebraicNumber(sep[i - 1]);
    bool hi_unbounded = (i + 1 == n);
    AlgebraicNumber hi_bound = hi_unbounded ? AlgebraicNumber(Rat(0)) : AlgebraicNumber(sep[i]);
    for (const auto& r : roots) {
      int c = r.compare(rho[i]);
      if (c < 0) {
        if (r.compare(lo_bound) > 0) lo_bound = r;
      } else if (c > 0) {
        if (hi_unbounded || r.compare(hi_bound) < 0) {
          hi_bound = r;
          hi_unbounded = false;
        }
      }
    }

    // Rational sub-windows on each side of rho_i, then a 10% shrink, then the
    // simplest admissible rational inside.
    Rat g_lo = rational_between(lo_bound, rho[i]);
    Rat g_hi;
    if (hi_unbounded) {
      rho[i].refine();
      g_hi = rho[i].hi() + 1;
    } else {
      g_hi = rational_between(rho[i], hi_bound);
    }
    rho[i].refine_to_width((g_hi - g_lo) / 16);
    Rat rlo = rho[i].lo(), rhi = rho[i].hi();
    Rat left_a = g_lo + (rlo - g_lo) / 10;
    Rat left_b = rlo - (rlo - g_lo) / 10;
    Rat right_a = rhi + (g_hi - rhi) / 10;
    Rat right_b = g_hi - (g_hi - rhi) / 10;
    Ls[i] = simplest_nontrivial_rational_between(left_a, left_b);
    Us[i] = simplest_nontrivial_rational_between(right_a, right_b);

    DecompTerm term;
    term.p = p;
    term.L = Ls[i];
    term.U = Us[i];
    term.U_infinite = false;
    term.zeta = zeta;
    terms.push_back(std::move(term));
  }

  // Gap polynomial: roots at L_1, U_n, and the (U_i, L_{i+1}) boundaries of
  // the between-window gaps lying outside sigma. The separators guarantee
  // U_i < L_{i+1}.
  std::vector<Rat> gap_roots;
  gap_roots.push_back(Ls[0]);
  gap_roots.push_back(Us[n - 1]);
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!gap_in[i]) {
      assert(Us[i] < Ls[i + 1]);
      gap_roots.push_back(Us[i]);
      gap_roots.push_back(Ls[i + 1]);
    }
  }
  RatPoly prod{Rat(1)};
  for (const Rat& c : gap_roots) {
    RatPoly next(prod.size() + 2, Rat(0));  // multiply by (x^2 - c^2)
    for (size_t k = 0; k < prod.size(); ++k) {
      next[k + 2] += prod[k];
      next[k] -= prod[k] * c * c;
    }
    prod = std::move(next);
  }
  IntPoly gap_poly = clear_denominators(prod).primitive_part().negate();
  assert(gap_poly.leading() < 0);
  assert(gap_poly.is_even());

  DecompTerm last;
  last.p = gap_poly;
  last.L = Rat(0);
  last.U_infinite = true;
  // The printed proposition takes zeta_{n+1} = 0, but S_0 would re-admit the
  // rational window boundaries (roots of the gap polynomial), none of which
  // belong to sigma; the strict form matches the pipeline's G'(p_{n+1}).
  last.zeta = 1;
  terms.push_back(std::move(last));
  return terms;
}

}  // namespace twodist
