#pragma once

#include "keane/rational.hpp"

#include <Eigen/Core>

namespace Eigen {

// Scalar traits so Eigen's dense types work with exact GMP scalars.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 60,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 120,
    MulCost = 120,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace keane {

using Mat4i = Eigen::Matrix<Int, 4, 4>;
using Vec4i = Eigen::Matrix<Int, 4, 1>;
using Mat4r = Eigen::Matrix<Rat, 4, 4>;
using Vec4r = Eigen::Matrix<Rat, 4, 1>;

inline Rat vec_sum(const Vec4r& v) { return v.sum(); }

// v / sum(v); requires a strictly positive sum.
inline Vec4r normalized(const Vec4r& v) {
  Rat s = v.sum();
  if (s <= 0) throw domain_error("normalized: nonpositive vector sum");
  Vec4r out = v;
  for (int i = 0; i < 4; ++i) out[i] /= s;
  return out;
}

// True when v lies on the open probability simplex (entries > 0, sum == 1).
inline bool on_open_simplex(const Vec4r& v) {
  for (int i = 0; i < 4; ++i)
    if (v[i] <= 0) return false;
  return v.sum() == 1;
}

}  // namespace keane
