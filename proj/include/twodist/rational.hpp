#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace twodist {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

// "3", "-7/2"
std::string rat_to_string(const Rat& q);
std::optional<Rat> rat_from_string(const std::string& s);

// Smallest-denominator rational in the open interval (lo, hi), by walking the
// Stern-Brocot tree. Requires lo < hi.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// Same, but restricted to fractions whose lowest-terms numerator and
// denominator are both >= 2 (the gadget constructions cannot consume
// integers or unit fractions).
Rat simplest_nontrivial_rational_between(const Rat& lo, const Rat& hi);

}  // namespace twodist
