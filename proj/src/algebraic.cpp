#include "twodist/algebraic.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

static int sgn_rat(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(p.primitive_part());
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative().primitive_part());
  while (chain.back().degree() > 0) {
    RatPoly r = rat_poly_rem(to_rat_poly(chain[chain.size() - 2]), to_rat_poly(chain.back()));
    if (rat_poly_is_zero(r)) break;
    // Negated remainder, content stripped to keep coefficients small.
    chain.push_back(clear_denominators(r).primitive_part().negate());
  }
  return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
  int variations = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn_rat(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int sturm_count(const std::vector<IntPoly>& chain, const Rat& a, const Rat& b) {
  assert(a <= b);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(Rat(0)) {}

AlgebraicNumber::AlgebraicNumber(const Rat& r) : lo_(r), hi_(r) {
  minpoly_ = IntPoly({-r.get_num(), r.get_den()});  // den*x - num
}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("AlgebraicNumber: inverted interval");
  if (minpoly_.is_zero()) throw std::invalid_argument("AlgebraicNumber: zero minpoly");
  minpoly_ = minpoly_.squarefree_part();  // sign-positive and primitive too
  if (lo_ == hi_) {
    if (sgn_rat(minpoly_.eval(lo_)) != 0)
      throw std::invalid_argument("AlgebraicNumber: point interval misses root");
    normalize_rational();
    return;
  }
  // Pin to the endpoint if the root sits exactly there.
  if (sgn_rat(minpoly_.eval(lo_)) == 0) {
    hi_ = lo_;
    normalize_rational();
    return;
  }
  if (sgn_rat(minpoly_.eval(hi_)) == 0) {
    lo_ = hi_;
    normalize_rational();
    return;
  }
  if (sturm_count(sturm_chain(minpoly_), lo_, hi_) != 1)
    throw std::invalid_argument("AlgebraicNumber: interval does not isolate one root");
}

void AlgebraicNumber::normalize_rational() {
  Rat r = lo_;
  minpoly_ = IntPoly({-r.get_num(), r.get_den()});
}

void AlgebraicNumber::refine() const {
  if (lo_ == hi_) return;
  Rat mid = (lo_ + hi_) / 2;
  int sm = sgn_rat(minpoly_.eval(mid));
  if (sm == 0) {
    lo_ = hi_ = mid;
    const_cast<AlgebraicNumber*>(this)->normalize_rational();
    return;
  }
  // minpoly is square-free here, so the isolated root is simple and the
  // endpoint signs differ.
  if (sgn_rat(minpoly_.eval(lo_)) == sm) lo_ = mid;
  else hi_ = mid;
}

void AlgebraicNumber::refine_to_width(const Rat& width) const {
  while (lo_ != hi_ && hi_ - lo_ > width) refine();
}

double AlgebraicNumber::to_double() const {
  if (is_rational()) return twodist::to_double(lo_);
  Rat scale = std::max(abs(lo_), abs(hi_));
  if (scale < 1) scale = 1;
  refine_to_width(scale / Rat(Int(1) << 60));
  return twodist::to_double((lo_ + hi_) / 2);
}

int AlgebraicNumber::compare(const Rat& r) const {
  for (;;) {
    if (is_rational()) return lo_ < r ? -1 : (lo_ == r ? 0 : 1);
    if (hi_ < r) return -1;
    if (lo_ > r) return 1;
    // lo <= r <= hi: r is the root iff minpoly vanishes at it (isolation).
    if (sgn_rat(minpoly_.eval(r)) == 0) return 0;
    refine();
  }
}

int AlgebraicNumber::compare(const AlgebraicNumber& other) const {
  if (other.is_rational()) return compare(other.rational_value());
  if (is_rational()) return -other.compare(rational_value());
  IntPoly g = poly_gcd(minpoly_, other.minpoly_);
  std::vector<IntPoly> gchain;
  if (g.degree() >= 1) gchain = sturm_chain(g);
  for (;;) {
    if (hi_ < other.lo_) return -1;
    if (lo_ > other.hi_) return 1;
    if (g.degree() >= 1) {
      // A root of g inside both isolating intervals is the unique root of
      // each minpoly there, i.e. the numbers are equal.
      Rat a = std::max(lo_, other.lo_);
      Rat b = std::min(hi_, other.hi_);
      if (a <= b) {
        if (sgn_rat(g.eval(a)) == 0 || sgn_rat(g.eval(b)) == 0) return 0;
        if (a < b && sturm_count(gchain, a, b) >= 1) return 0;
      }
    }
    refine();
    other.refine();
    if (is_rational() || other.is_rational()) return compare(other);
  }
}

int AlgebraicNumber::sign_of(const IntPoly& q) const {
  if (q.is_zero()) return 0;
  if (is_rational()) return sgn_rat(q.eval(rational_value()));
  IntPoly g = poly_gcd(minpoly_, q);
  if (g.degree() >= 1) {
    // q(alpha) == 0 iff g has a root inside the isolating interval.
    auto gchain = sturm_chain(g);
    if (sgn_rat(g.eval(lo_)) == 0 || sgn_rat(g.eval(hi_)) == 0) return 0;
    if (sturm_count(gchain, lo_, hi_) >= 1) return 0;
  }
  // q(alpha) != 0: shrink until the interval is free of roots of q and the
  // endpoint signs agree.
  auto qchain = sturm_chain(q.squarefree_part());
  AlgebraicNumber probe = *this;
  for (;;) {
    if (probe.is_rational()) return sgn_rat(q.eval(probe.rational_value()));
    int sa = sgn_rat(q.eval(probe.lo()));
    int sb = sgn_rat(q.eval(probe.hi()));
    if (sa == sb && sa != 0 && sturm_count(qchain, probe.lo(), probe.hi()) == 0) return sa;
    probe.refine();
  }
}

Int AlgebraicNumber::floor() const {
  if (is_rational()) return rat_floor(rational_value());
  AlgebraicNumber probe = *this;
  for (;;) {
    if (probe.is_rational()) return rat_floor(probe.rational_value());
    Int fl = rat_floor(probe.lo()), fh = rat_floor(probe.hi());
    if (fl == fh) return fl;
    if (probe.compare(Rat(fh)) == 0) return fh;
    probe.refine();
  }
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rat_to_string(rational_value());
  std::string s = "alg(";
  const auto& cs = minpoly_.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += cs[i].get_str();
  }
  s += ";" + rat_to_string(lo_) + "," + rat_to_string(hi_) + ")";
  return s;
}

std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  IntPoly s = p.squarefree_part();
  std::vector<AlgebraicNumber> roots;
  if (s.degree() <= 0) return roots;
  auto chain = sturm_chain(s);
  Rat bound = s.cauchy_root_bound();

  auto safe_split = [&](const Rat& a, const Rat& b) {
    Rat mid = (a + b) / 2;
    for (long k = 3;; k += 2) {
      if (sgn_rat(s.eval(mid)) != 0) return mid;
      mid = a + (b - a) / Rat(k);
    }
  };

  struct Seg {
    Rat a, b;
    int count;
  };
  std::vector<Seg> stack;
  int total = sturm_count(chain, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Seg seg = stack.back();
    stack.pop_back();
    if (seg.count == 1) {
      roots.emplace_back(s, seg.a, seg.b);
      continue;
    }
    Rat mid = safe_split(seg.a, seg.b);
    int left = sturm_count(chain, seg.a, mid);
    int right = seg.count - left;
    if (right > 0) stack.push_back({mid, seg.b, right});
    if (left > 0) stack.push_back({seg.a, mid, left});
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return x.compare(y) < 0; });
  return roots;
}

std::optional<AlgebraicNumber> max_root(const IntPoly& p) {
  auto roots = isolate_real_roots(p);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

IntPoly even_minimal_polynomial(const AlgebraicNumber& alpha) {
  const IntPoly& mu = alpha.minpoly();
  IntPoly w = (mu * mu.reflect()).squarefree_part();
  // The square-free part of an even polynomial is even unless 0 is among its
  // roots, in which case it carries a single x factor; alpha != 0, strip it.
  if (w.coeff(0) == 0) {
    if (alpha.compare(Rat(0)) == 0)
      throw std::invalid_argument("even_minimal_polynomial: alpha must be nonzero");
    std::vector<Int> shifted(w.coeffs().begin() + 1, w.coeffs().end());
    w = IntPoly(std::move(shifted));
  }
  if (w.leading() < 0) w = w.negate();
  w = w.primitive_part();
  if (!w.is_even()) throw Error("even_minimal_polynomial: result not even");
  if (alpha.sign_of(w) != 0) throw Error("even_minimal_polynomial: alpha not a root");
  if (alpha.sign_of(w.derivative()) == 0) throw Error("even_minimal_polynomial: root not simple");
  return w;
}

}  // namespace twodist
