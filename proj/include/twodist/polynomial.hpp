#pragma once

#include <string>
#include <vector>

#include "twodist/rational.hpp"

namespace twodist {

// Univariate polynomial with arbitrary-precision integer coefficients.
// coeffs[k] is the coefficient of x^k. The zero polynomial is {0}; otherwise
// the leading (last) coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() : coeffs_{Int(0)} {}
  explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static IntPoly constant(const Int& c) { return IntPoly({c}); }
  static IntPoly monomial(const Int& c, int power);
  // Convenience for tests: low-to-high small coefficients.
  static IntPoly of(std::initializer_list<long> coeffs);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const Int& leading() const { return coeffs_.back(); }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Int(0);
  }

  // All odd-index coefficients vanish, i.e. p(x) = p(-x).
  bool is_even() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly negate() const;
  IntPoly reflect() const;  // p(-x)
  IntPoly derivative() const;

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  // Divide out the integer content (gcd of coefficients); sign kept.
  IntPoly primitive_part() const;
  // p / gcd(p, p'); primitive with positive leading coefficient.
  IntPoly squarefree_part() const;

  // 1 + max |a_i| / |a_n|; every real root lies in (-B, B).
  Rat cauchy_root_bound() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// Polynomial arithmetic over the rationals; used internally by root isolation.
using RatPoly = std::vector<Rat>;  // same layout, not normalized

RatPoly to_rat_poly(const IntPoly& p);
IntPoly clear_denominators(const RatPoly& p);  // scale by lcm of denominators
// Remainder of a by b over Q. b must be nonzero.
RatPoly rat_poly_rem(const RatPoly& a, const RatPoly& b);
bool rat_poly_is_zero(const RatPoly& p);

// Exact polynomial gcd (primitive, positive leading coefficient).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// Exact quotient; asserts the division is exact.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);

}  // namespace twodist
