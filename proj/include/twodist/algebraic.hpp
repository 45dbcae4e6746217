#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodist/polynomial.hpp"

namespace twodist {

// A real algebraic number: a square-free integer polynomial with positive
// leading coefficient plus a rational interval [lo, hi] containing exactly
// one of its real roots. Rationals are stored with lo == hi.
class AlgebraicNumber {
 public:
  AlgebraicNumber();  // zero
  explicit AlgebraicNumber(const Rat& r);
  // Validates the single-root invariant with a Sturm count.
  AlgebraicNumber(IntPoly minpoly, Rat lo, Rat hi);

  const IntPoly& minpoly() const { return minpoly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  bool is_rational() const { return lo_ == hi_; }
  // Defined only when is_rational().
  const Rat& rational_value() const { return lo_; }

  // Halve the isolating interval; keeps the invariant.
  void refine() const;
  // Refine until hi - lo <= width (no-op for rationals).
  void refine_to_width(const Rat& width) const;

  double to_double() const;

  // Three-way comparisons, exact.
  int compare(const Rat& r) const;
  int compare(const AlgebraicNumber& other) const;
  bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }
  bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }

  // Exact sign of q at this number: -1, 0, +1.
  int sign_of(const IntPoly& q) const;

  Int floor() const;

  std::string to_string() const;

 private:
  void normalize_rational();
  IntPoly minpoly_;
  mutable Rat lo_, hi_;
  mutable std::vector<IntPoly> sturm_;  // cached chain of minpoly_
};

// Sturm machinery (exposed for tests).
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);
int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& x);
// Number of distinct roots in (a, b]; endpoints must not be roots of chain[0].
int sturm_count(const std::vector<IntPoly>& chain, const Rat& a, const Rat& b);

// One AlgebraicNumber per distinct real root, ascending. Carries the
// square-free part of p as minpoly.
std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p);

// Largest real root, or nullopt when p has none.
std::optional<AlgebraicNumber> max_root(const IntPoly& p);

// Even integer polynomial with positive leading coefficient having alpha as a
// simple root (square-free by construction).
IntPoly even_minimal_polynomial(const AlgebraicNumber& alpha);

}  // namespace twodist
