#include "twodist/semialgebraic.hpp"

#include <algorithm>
#include <cctype>

#include "twodist/errors.hpp"

namespace twodist {

int Endpoint::compare_value(const Endpoint& o) const {
  auto rank = [](Kind k) { return k == Kind::Zero ? 0 : (k == Kind::Finite ? 1 : 2); };
  if (kind != Kind::Finite || o.kind != Kind::Finite) {
    int a = rank(kind), b = rank(o.kind);
    if (a != b) return a < b ? -1 : 1;
    if (kind == Kind::Finite) return value.compare(o.value);
    return 0;
  }
  return value.compare(o.value);
}

int Endpoint::compare_value(const Rat& r) const {
  if (kind == Kind::Zero) return r > 0 ? -1 : (r == 0 ? 0 : 1);
  if (kind == Kind::PlusInfinity) return 1;
  return value.compare(r);
}

SemialgebraicSet::SemialgebraicSet(std::vector<SetInterval> intervals)
    : intervals_(std::move(intervals)) {
  normalize();
}

void SemialgebraicSet::normalize() {
  std::vector<SetInterval> kept;
  for (auto& iv : intervals_) {
    if (iv.lo.kind == Endpoint::Kind::PlusInfinity)
      throw NonNormalizedSet("interval starts at +inf");
    if (iv.hi.kind == Endpoint::Kind::Zero) throw NonNormalizedSet("interval ends at 0");
    // Sets live in R_{>0}: drop anything at or below zero, clamp left ends.
    if (iv.hi.is_finite() && iv.hi.value.compare(Rat(0)) <= 0) continue;
    if (iv.lo.is_finite() && iv.lo.value.compare(Rat(0)) <= 0) iv.lo = Endpoint::zero();
    int c = iv.lo.compare_value(iv.hi);
    if (c > 0) continue;
    if (c == 0) {
      // A point; keep only if both sides closed (and finite positive).
      if (!(iv.lo.is_finite() && iv.lo.closed && iv.hi.closed)) continue;
    }
    kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(), [](const SetInterval& a, const SetInterval& b) {
    int c = a.lo.compare_value(b.lo);
    if (c != 0) return c < 0;
    // Closed endpoint starts earlier.
    return a.lo.closed && !b.lo.closed;
  });
  std::vector<SetInterval> merged;
  for (auto& iv : kept) {
    if (merged.empty()) {
      merged.push_back(iv);
      continue;
    }
    SetInterval& prev = merged.back();
    int c = iv.lo.compare_value(prev.hi);
    bool joinable = c < 0 || (c == 0 && (iv.lo.closed || prev.hi.closed));
    if (!joinable) {
      merged.push_back(iv);
      continue;
    }
    int ch = iv.hi.compare_value(prev.hi);
    if (ch > 0 || (ch == 0 && iv.hi.closed && !prev.hi.closed)) prev.hi = iv.hi;
  }
  intervals_ = std::move(merged);
}

static bool point_in(const SetInterval& iv, const Rat& x) {
  int cl = iv.lo.compare_value(x);
  if (cl > 0) return false;
  if (cl == 0 && !(iv.lo.is_finite() && iv.lo.closed)) return false;
  int ch = iv.hi.compare_value(x);
  if (ch < 0) return false;
  if (ch == 0 && !(iv.hi.is_finite() && iv.hi.closed)) return false;
  return true;
}

bool SemialgebraicSet::contains(const Rat& x) const {
  if (x <= 0) return false;
  for (const auto& iv : intervals_)
    if (point_in(iv, x)) return true;
  return false;
}

bool SemialgebraicSet::contains(const AlgebraicNumber& x) const {
  if (x.compare(Rat(0)) <= 0) return false;
  for (const auto& iv : intervals_) {
    int cl = iv.lo.is_finite() ? iv.lo.value.compare(x) : (iv.lo.kind == Endpoint::Kind::Zero ? -1 : 1);
    if (cl > 0) continue;
    if (cl == 0 && !iv.lo.closed) continue;
    int ch = iv.hi.is_finite() ? iv.hi.value.compare(x) : (iv.hi.kind == Endpoint::Kind::PlusInfinity ? 1 : -1);
    if (ch < 0) continue;
    if (ch == 0 && !iv.hi.closed) continue;
    return true;
  }
  return false;
}

std::vector<AlgebraicNumber> SemialgebraicSet::endpoint_values() const {
  std::vector<AlgebraicNumber> vals;
  for (const auto& iv : intervals_) {
    if (iv.lo.is_finite()) vals.push_back(iv.lo.value);
    if (iv.hi.is_finite()) vals.push_back(iv.hi.value);
  }
  std::sort(vals.begin(), vals.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.compare(b) < 0;
  });
  vals.erase(std::unique(vals.begin(), vals.end(),
                         [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                           return a.compare(b) == 0;
                         }),
             vals.end());
  return vals;
}

bool SemialgebraicSet::within(const Rat& lo, const Rat& hi) const {
  for (const auto& iv : intervals_) {
    if (iv.hi.kind == Endpoint::Kind::PlusInfinity) return false;
    if (iv.lo.kind == Endpoint::Kind::Zero) return false;
    if (iv.lo.value.compare(lo) < 0) return false;
    if (iv.hi.value.compare(hi) > 0) return false;
  }
  return true;
}

std::string SemialgebraicSet::to_string() const {
  if (intervals_.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (i) out += " U ";
    out += (iv.lo.is_finite() && iv.lo.closed) ? "[" : "(";
    out += iv.lo.kind == Endpoint::Kind::Zero ? "0" : iv.lo.value.to_string();
    out += ",";
    out += iv.hi.kind == Endpoint::Kind::PlusInfinity ? "inf" : iv.hi.value.to_string();
    out += (iv.hi.is_finite() && iv.hi.closed) ? "]" : ")";
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("set spec: " + msg + " at offset " + std::to_string(i));
  }
};

Rat parse_rational(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  if (cur.i < cur.s.size() && (cur.s[cur.i] == '-' || cur.s[cur.i] == '+')) ++cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i < cur.s.size() && cur.s[cur.i] == '/') {
    ++cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  }
  auto q = rat_from_string(cur.s.substr(start, cur.i - start));
  if (!q) cur.fail("expected rational");
  return *q;
}

Endpoint parse_endpoint(Cursor& cur, bool closed) {
  char c = cur.peek();
  if (c == 'i') {
    if (cur.s.compare(cur.i, 3, "inf") != 0) cur.fail("expected 'inf'");
    cur.i += 3;
    return Endpoint::infinity();
  }
  if (c == 'a') {
    if (cur.s.compare(cur.i, 4, "alg(") != 0) cur.fail("expected 'alg('");
    cur.i += 4;
    std::vector<Int> coeffs;
    for (;;) {
      Rat q = parse_rational(cur);
      if (q.get_den() != 1) cur.fail("alg() coefficients must be integers");
      coeffs.push_back(q.get_num());
      if (cur.eat(',')) continue;
      break;
    }
    if (!cur.eat(';')) cur.fail("expected ';' in alg()");
    Rat lo = parse_rational(cur);
    if (!cur.eat(',')) cur.fail("expected ',' in alg()");
    Rat hi = parse_rational(cur);
    if (!cur.eat(')')) cur.fail("expected ')' closing alg()");
    AlgebraicNumber a(IntPoly(coeffs), lo, hi);
    if (a.compare(Rat(0)) == 0) return Endpoint::zero();
    return Endpoint::finite(std::move(a), closed);
  }
  Rat q = parse_rational(cur);
  if (q == 0) return Endpoint::zero();
  return Endpoint::finite(AlgebraicNumber(q), closed);
}

}  // namespace

SemialgebraicSet SemialgebraicSet::parse(const std::string& text) {
  Cursor cur{text};
  std::vector<SetInterval> intervals;
  for (;;) {
    cur.skip_ws();
    bool lo_closed;
    if (cur.eat('(')) lo_closed = false;
    else if (cur.eat('[')) lo_closed = true;
    else cur.fail("expected '(' or '['");
    Endpoint lo = parse_endpoint(cur, lo_closed);
    if (!cur.eat(',')) cur.fail("expected ','");
    // Closedness known only after the bracket; parse value first.
    Endpoint hi = parse_endpoint(cur, false);
    if (cur.eat(')')) hi.closed = false;
    else if (cur.eat(']')) hi.closed = true;
    else cur.fail("expected ')' or ']'");
    if (hi.kind == Endpoint::Kind::Zero) {
      // "0" as an upper endpoint: the interval has nothing above 0.
      hi = Endpoint::finite(AlgebraicNumber(Rat(0)), hi.closed);
    }
    intervals.push_back({std::move(lo), std::move(hi)});
    cur.skip_ws();
    if (cur.i >= cur.s.size()) break;
    if (cur.s[cur.i] == 'U' || cur.s[cur.i] == 'u') {
      ++cur.i;
      continue;
    }
    cur.fail("expected 'U' or end of input");
  }
  return SemialgebraicSet(std::move(intervals));
}

}  // namespace twodist
