#include "twodist/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace twodist {

void IntPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Int(0));
}

IntPoly IntPoly::monomial(const Int& c, int power) {
  std::vector<Int> v(power + 1, Int(0));
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::of(std::initializer_list<long> coeffs) {
  std::vector<Int> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

bool IntPoly::is_even() const {
  for (size_t k = 1; k < coeffs_.size(); k += 2)
    if (coeffs_[k] != 0) return false;
  return true;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negate() const {
  std::vector<Int> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reflect() const {
  std::vector<Int> v = coeffs_;
  for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<Int> v(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Int(static_cast<long>(k));
  return IntPoly(std::move(v));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(coeffs_.back());
  for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + Rat(coeffs_[i]);
  return acc;
}

double IntPoly::eval(double x) const {
  double acc = to_double(coeffs_.back());
  for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
  return acc;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int g(0);
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  std::vector<Int> v = coeffs_;
  for (auto& c : v) c /= g;
  return IntPoly(std::move(v));
}

Rat IntPoly::cauchy_root_bound() const {
  assert(!is_zero());
  Rat m(0);
  for (size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    Rat r = abs(Rat(coeffs_[i]) / Rat(coeffs_.back()));
    if (r > m) m = r;
  }
  return m + 1;
}

std::string IntPoly::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeff(k);
    if (c == 0 && !(is_zero() && k == 0)) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Int a = abs(c);
    if (a != 1 || k == 0) out << a.get_str();
    if (k >= 1) {
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

RatPoly to_rat_poly(const IntPoly& p) {
  RatPoly v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return v;
}

bool rat_poly_is_zero(const RatPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

static void rat_poly_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly clear_denominators(const RatPoly& p) {
  RatPoly q = p;
  rat_poly_trim(q);
  if (q.empty()) return IntPoly();
  Int l(1);
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  v.reserve(q.size());
  for (const auto& c : q) {
    Rat s = c * Rat(l);
    assert(s.get_den() == 1);
    v.push_back(s.get_num());
  }
  return IntPoly(std::move(v));
}

RatPoly rat_poly_rem(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a, d = b;
  rat_poly_trim(r);
  rat_poly_trim(d);
  if (d.empty()) throw std::invalid_argument("rat_poly_rem: division by zero polynomial");
  while (r.size() >= d.size() && !r.empty()) {
    Rat f = r.back() / d.back();
    size_t shift = r.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    rat_poly_trim(r);
  }
  return r;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rat_poly(a), y = to_rat_poly(b);
  rat_poly_trim(x);
  rat_poly_trim(y);
  while (!y.empty()) {
    RatPoly r = rat_poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return IntPoly();
  IntPoly g = clear_denominators(x).primitive_part();
  if (g.leading() < 0) g = g.negate();
  return g;
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_div_exact: zero divisor");
  RatPoly r = to_rat_poly(a), d = to_rat_poly(b);
  rat_poly_trim(r);
  rat_poly_trim(d);
  RatPoly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Rat(0));
  while (r.size() >= d.size() && !r.empty()) {
    Rat f = r.back() / d.back();
    size_t shift = r.size() - d.size();
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    rat_poly_trim(r);
  }
  if (!r.empty()) throw std::invalid_argument("poly_div_exact: division is not exact");
  // Callers divide by primitive factors, so the quotient is integral
  // (Gauss's lemma); assert rather than silently scaling.
  rat_poly_trim(q);
  std::vector<Int> v;
  for (const auto& c : q) {
    assert(c.get_den() == 1);
    v.push_back(c.get_num());
  }
  if (v.empty()) v.push_back(Int(0));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::squarefree_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(*this, derivative());
  IntPoly s = (g.degree() == 0) ? *this : poly_div_exact(*this, g);
  s = s.primitive_part();
  if (s.leading() < 0) s = s.negate();
  return s;
}

}  // namespace twodist
