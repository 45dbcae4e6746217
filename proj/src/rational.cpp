#include "twodist/rational.hpp"

#include <stdexcept>

namespace twodist {

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
  Int n = rat_floor(lo) + 1;  // smallest integer strictly above lo
  if (Rat(n) < hi) return Rat(n);
  // No integer inside; (lo,hi) sits within (m, m+1]. Recurse on inverted
  // fractional parts (the continued-fraction step).
  Int m = rat_floor(lo);
  Rat fa = lo - Rat(m);
  Rat fb = hi - Rat(m);
  if (fa == 0) {
    Int k = rat_floor(1 / fb) + 1;
    return Rat(m) + Rat(1) / Rat(k);
  }
  Rat inner = simplest_rational_between(1 / fb, 1 / fa);
  return Rat(m) + 1 / inner;
}

Rat simplest_nontrivial_rational_between(const Rat& lo, const Rat& hi) {
  Rat best = simplest_rational_between(lo, hi);
  if (abs(best.get_num()) >= 2 && best.get_den() >= 2) return best;
  for (Int den = 2;; den = den + 1) {
    Int n_lo = rat_floor(lo * Rat(den)) + 1;
    Int n_hi = rat_ceil(hi * Rat(den)) - 1;
    for (Int num = n_lo; num <= n_hi; num = num + 1) {
      if (abs(num) < 2) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      return Rat(num, den);
    }
  }
}

}  // namespace twodist
