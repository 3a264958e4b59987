#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace keane {

// Exact arbitrary-precision scalars used everywhere in the library.
// All decisions (interval containment, lemma verdicts, admissibility,
// measure enclosures) are made with these types; floating point never
// enters a decision path.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown on precondition violations (maps to CLI exit code 2).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a step/digit budget is exhausted (maps to CLI exit code 3).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den as a canonical rational; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// Parses "p/q", "p", or a plain decimal such as "0.5" / "-1.25" exactly.
Rat parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1), matching GMP's
// printing; used for all serialized rationals.
std::string rat_string(const Rat& x);

enum class Round { Down, Up };

// Fixed-point decimal rendering of x with `digits` fractional digits,
// rounded in the requested direction.  Deterministic; used for report
// columns that are conventionally decimal (dimension bounds and error
// radii).
std::string to_decimal(const Rat& x, int digits, Round mode);

// base^e for e >= 0.
Int ipow(const Int& base, unsigned long e);

// floor(a^(1/n)) for a >= 0, n >= 1.
Int nth_root_floor(const Int& a, unsigned long n);

// Certified enclosure of x^(p/q) (x > 0 rational, p,q >= 1), accurate to
// roughly `digits` decimal digits.  Returns {lo, hi} with lo <= x^(p/q) <= hi.
struct RatInterval;
RatInterval pow_bounds(const Rat& x, unsigned long p, unsigned long q, int digits);

// Certified enclosure of ln(x) (x > 0 rational), accurate to roughly `digits`
// decimal digits; endpoints are exact dyadic rationals.
RatInterval ln_bounds(const Rat& x, int digits);

// Closed rational interval [lo, hi]; the basic certified-enclosure type.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rat& point) : lo(point), hi(point) {}
  RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
    if (l > h) throw domain_error("RatInterval: lo > hi");
  }

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

  // Product, valid for intervals with nonnegative endpoints (the only case
  // the library needs; checked).
  RatInterval operator*(const RatInterval& o) const {
    if (lo < 0 || o.lo < 0) throw domain_error("RatInterval: product needs nonnegative intervals");
    return {lo * o.lo, hi * o.hi};
  }

  RatInterval scaled(const Rat& c) const {
    if (c < 0) throw domain_error("RatInterval: negative scale");
    return {lo * c, hi * c};
  }

  // 1/[lo,hi] for strictly positive intervals.
  RatInterval reciprocal() const {
    if (lo <= 0) throw domain_error("RatInterval: reciprocal needs a positive interval");
    return {Rat(1) / hi, Rat(1) / lo};
  }

  // Intersection; both inputs must already contain the common true value,
  // so emptiness signals an internal soundness bug.
  RatInterval intersect(const RatInterval& o) const {
    Rat l = std::max(lo, o.lo), h = std::min(hi, o.hi);
    if (l > h) throw domain_error("RatInterval: empty intersection");
    return {l, h};
  }
};

}  // namespace keane
