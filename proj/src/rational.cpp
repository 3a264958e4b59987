#include "keane/rational.hpp"

#include <mpfr.h>

#include <cctype>

namespace keane {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw domain_error("parse_rational: empty string");
  auto bad = [&] { throw domain_error("parse_rational: cannot parse '" + text + "'"); };
  std::size_t slash = text.find('/');
  std::size_t dot = text.find('.');
  if (slash != std::string::npos && dot != std::string::npos) bad();
  auto check_int = [&](const std::string& s, bool sign_ok) {
    if (s.empty()) bad();
    std::size_t i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
  };
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    Int n(num), d(den);
    return make_rat(n, d);
  }
  if (dot != std::string::npos) {
    std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty() && fp.empty()) bad();
    if (!ip.empty()) check_int(ip, false);
    if (!fp.empty()) check_int(fp, false);
    Int scale = ipow(Int(10), fp.size());
    Int whole = ip.empty() ? Int(0) : Int(ip);
    Int frac = fp.empty() ? Int(0) : Int(fp);
    Int num = whole * scale + frac;
    if (neg) num = -num;
    return make_rat(num, scale);
  }
  check_int(text, true);
  return Rat(Int(text));
}

std::string rat_string(const Rat& x) { return x.get_str(); }

std::string to_decimal(const Rat& x, int digits, Round mode) {
  if (digits < 0) throw domain_error("to_decimal: negative digit count");
  bool neg = x < 0;
  Rat mag = neg ? Rat(-x) : x;
  Int scale = ipow(Int(10), static_cast<unsigned long>(digits));
  // scaled = mag * scale, rounded toward the requested direction of x
  // (for negative x, rounding x down means rounding |x| up).
  Int num = mag.get_num() * scale;
  const Int& den = mag.get_den();
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  bool round_mag_up = (mode == Round::Up) != neg;
  if (round_mag_up && r != 0) q += 1;
  std::string s = q.get_str();
  std::string out;
  if (digits == 0) {
    out = s;
  } else {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
  }
  if (neg && q != 0) out.insert(0, 1, '-');
  return out;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int nth_root_floor(const Int& a, unsigned long n) {
  if (a < 0) throw domain_error("nth_root_floor: negative radicand");
  if (n == 0) throw domain_error("nth_root_floor: zeroth root");
  Int r;
  mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

RatInterval pow_bounds(const Rat& x, unsigned long p, unsigned long q, int digits) {
  if (x <= 0) throw domain_error("pow_bounds: base must be positive");
  if (p == 0 || q == 0) throw domain_error("pow_bounds: exponent must be positive");
  // x^(p/q) = (x^p)^(1/q).  With s = 10^digits and t = floor(x^p * s^q),
  //   root(t) <= x^(p/q) * s < root(t+1) + 1,
  // giving rational bounds of width about 2/s.
  Int scale = ipow(Int(10), static_cast<unsigned long>(digits));
  Rat xp;
  {
    Int num = ipow(x.get_num(), p), den = ipow(x.get_den(), p);
    xp = make_rat(num, den);
  }
  Int num = xp.get_num() * ipow(scale, q);
  Int t;
  mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), xp.get_den().get_mpz_t());
  Int lo = nth_root_floor(t, q);
  Int hi = nth_root_floor(t + 1, q) + 1;
  return RatInterval(make_rat(lo, scale), make_rat(hi, scale));
}

namespace {

// Exact rational value of a binary float, read off as mantissa * 2^exp.
Rat rat_from_mpfr(const mpfr_t f) {
  Int z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), f);
  Int num = z, den = 1;
  if (e >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return make_rat(num, den);
}

}  // namespace

RatInterval ln_bounds(const Rat& x, int digits) {
  if (x <= 0) throw domain_error("ln_bounds: argument must be positive");
  if (digits < 1) throw domain_error("ln_bounds: need at least one digit");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits) * 4 + 64;
  mpfr_t t;
  mpfr_init2(t, prec);
  // Rounding the argument down and the log down gives a certified lower
  // endpoint (log is increasing); mirrored for the upper endpoint.
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDD);
  mpfr_log(t, t, MPFR_RNDD);
  Rat lo = rat_from_mpfr(t);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(t, t, MPFR_RNDU);
  Rat hi = rat_from_mpfr(t);
  mpfr_clear(t);
  return RatInterval(lo, hi);
}

}  // namespace keane
