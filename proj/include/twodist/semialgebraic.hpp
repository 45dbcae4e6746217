#pragma once

#include <string>
#include <vector>

#include "twodist/algebraic.hpp"

namespace twodist {

// One side of an interval over the positive reals.
struct Endpoint {
  enum class Kind { Zero, Finite, PlusInfinity };
  Kind kind = Kind::Zero;
  AlgebraicNumber value;  // meaningful only for Finite
  bool closed = false;    // Zero / PlusInfinity are always open

  static Endpoint zero() { return {Kind::Zero, AlgebraicNumber(), false}; }
  static Endpoint infinity() { return {Kind::PlusInfinity, AlgebraicNumber(), false}; }
  static Endpoint finite(AlgebraicNumber v, bool closed) {
    return {Kind::Finite, std::move(v), closed};
  }
  bool is_finite() const { return kind == Kind::Finite; }

  // Orders by position on the extended half-line (ignores closedness).
  int compare_value(const Endpoint& o) const;
  int compare_value(const Rat& r) const;
};

struct SetInterval {
  Endpoint lo, hi;
};

// Finitely many disjoint, non-adjacent intervals over R_{>0}, sorted by their
// left endpoint. Construction normalizes (merges, drops empties).
class SemialgebraicSet {
 public:
  SemialgebraicSet() = default;
  explicit SemialgebraicSet(std::vector<SetInterval> intervals);

  const std::vector<SetInterval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  bool contains(const Rat& x) const;
  bool contains(const AlgebraicNumber& x) const;

  // All finite endpoint values, ascending, deduplicated.
  std::vector<AlgebraicNumber> endpoint_values() const;

  // True when every point lies in [lo, hi].
  bool within(const Rat& lo, const Rat& hi) const;

  std::string to_string() const;

  // Grammar:
  //   set      := interval ( "U" interval )*
  //   interval := ("(" | "[") endpoint "," endpoint (")" | "]")
  //   endpoint := rational | "inf" | "alg(" int ("," int)* ";" rational "," rational ")"
  static SemialgebraicSet parse(const std::string& text);

 private:
  void normalize();
  std::vector<SetInterval> intervals_;
};

}  // namespace twodist
