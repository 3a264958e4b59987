#include "keane/rules.hpp"

#include <utility>

namespace keane {

namespace {

void require_depth(int K) {
  if (K < 1) throw domain_error("rule depth must be at least 1");
}

// alpha = p/q in (0,1]; returns {p, q} with the floor power x^(1/alpha) = (x^q)^(1/p).
std::pair<Int, Int> root_exponents(const Rat& alpha) {
  if (alpha <= 0 || alpha > 1)
    throw domain_error("rule exponent must lie in (0, 1], got " + rat_string(alpha));
  return {alpha.get_num(), alpha.get_den()};
}

Int floor_inverse_power(const Int& x, const Int& p, const Int& q) {
  if (x < 1) throw domain_error("floor power base must be positive");
  if (!p.fits_ulong_p() || !q.fits_ulong_p())
    throw resource_error("power exponent too large");
  Int xq;
  mpz_pow_ui(xq.get_mpz_t(), x.get_mpz_t(), q.get_ui());
  return nth_root_floor(xq, p.get_ui());
}

// Running accumulator: appends pairs and maintains b_k = A_k^T b_{k-1}.
struct Builder {
  std::vector<std::pair<Int, Int>> pairs;
  Vec4i b = Vec4i::Ones();

  void push(const Int& m, const Int& n) {
    if (m < 1 || n < 1)
      throw domain_error("multiplicity parameters must be positive");
    pairs.emplace_back(m, n);
    b = (keane_matrix(m, n).transpose() * b).eval();
  }

  ParamSeq finish(std::string rule, std::optional<Rat> alpha = std::nullopt) && {
    ParamSeq seq;
    seq.rule = std::move(rule);
    seq.alpha = std::move(alpha);
    seq.pairs = std::move(pairs);
    return seq;
  }
};

}  // namespace

ParamSeq rule_minimal_admissible(int K, const Int& n1) {
  require_depth(K);
  Builder bld;
  Int n = n1;
  for (int k = 1; k <= K; ++k) {
    Int m = 3 * (n + 1);
    bld.push(m, n);
    n = 2 * m - 1;
  }
  return std::move(bld).finish("minimal-admissible");
}

ParamSeq rule_flip(int K, int m_bit, int n_bit, const Int& n1) {
  require_depth(K);
  if ((m_bit != 0 && m_bit != 1) || (n_bit != 0 && n_bit != 1))
    throw domain_error("flip bits must be 0 or 1");
  Builder bld;
  Int n = n1;
  for (int k = 1; k <= K; ++k) {
    Int m = m_bit ? Int(4 * n) : ipow(n, k);
    bld.push(m, n);
    n = n_bit ? Int(4 * m) : ipow(m, k);
  }
  return std::move(bld).finish("flip" + std::to_string(m_bit) + std::to_string(n_bit));
}

ParamSeq rule_power_m(int K, const Int& n1) {
  require_depth(K);
  Builder bld;
  Int n = n1;
  for (int k = 1; k <= K; ++k) {
    Int m = ipow(n, k);
    bld.push(m, n);
    n = 2 * m - 1;
  }
  return std::move(bld).finish("power-m");
}

ParamSeq rule_alpha2(int K, const Rat& alpha) {
  require_depth(K);
  auto [p, q] = root_exponents(alpha);
  Builder bld;
  bld.push(33, 10);
  Int next_n = 65;
  for (int k = 1; static_cast<int>(bld.pairs.size()) < K; ++k) {
    Int m = ipow(next_n * bld.b[2], k) + 1;
    bld.push(m, next_n);
    next_n = floor_inverse_power(m, p, q);
  }
  return std::move(bld).finish("alpha2", alpha);
}

ParamSeq rule_alpha3(int K, const Rat& alpha) {
  require_depth(K);
  auto [p, q] = root_exponents(alpha);
  Builder bld;
  bld.push(30, 10);
  for (int k = 2; k <= K; ++k) {
    if (k % 2 == 0) {
      Int n = ipow(bld.b[1], k) + 1;
      Int m = floor_inverse_power(n, p, q);
      bld.push(m, n);
    } else {
      Int n = 2 * bld.pairs.back().first;
      bld.push(3 * n, n);
    }
  }
  return std::move(bld).finish("alpha3", alpha);
}

ParamSeq rule_generic(int K, const Int& n1) {
  require_depth(K);
  Builder bld;
  Int n = n1;
  for (int k = 1; k <= K; ++k) {
    bld.push(3 * n, n);
    n = ipow(bld.b[1], k);
  }
  return std::move(bld).finish("generic");
}

ParamSeq rule_appendix(int K, const Int& n1) {
  require_depth(K);
  Builder bld;
  Int n = n1;
  for (int k = 1; k <= K; ++k) {
    bld.push(Int(k) * Int(k) * n, n);
    n = bld.b[1] * bld.b[1];
  }
  return std::move(bld).finish("appendix");
}

ParamSeq rule_explicit(std::vector<std::pair<Int, Int>> pairs) {
  if (pairs.empty()) throw domain_error("parameter sequence must be nonempty");
  Builder bld;
  for (const auto& [m, n] : pairs) bld.push(m, n);
  return std::move(bld).finish("explicit");
}

ParamSeq generate_rule(const std::string& tag, int K, const std::optional<Rat>& alpha,
                       const Int& n1) {
  const bool needs_alpha = (tag == "alpha2" || tag == "alpha3");
  if (needs_alpha && !alpha)
    throw domain_error("rule '" + tag + "' requires an exponent");
  if (!needs_alpha && alpha)
    throw domain_error("rule '" + tag + "' does not take an exponent");
  if (tag == "minimal-admissible") return rule_minimal_admissible(K, n1);
  if (tag == "flip00") return rule_flip(K, 0, 0, n1);
  if (tag == "flip01") return rule_flip(K, 0, 1, n1);
  if (tag == "flip10") return rule_flip(K, 1, 0, n1);
  if (tag == "flip11") return rule_flip(K, 1, 1, n1);
  if (tag == "power-m") return rule_power_m(K, n1);
  if (tag == "alpha2") return rule_alpha2(K, *alpha);
  if (tag == "alpha3") return rule_alpha3(K, *alpha);
  if (tag == "generic") return rule_generic(K, n1);
  if (tag == "appendix") return rule_appendix(K, n1);
  throw domain_error("unknown rule '" + tag + "'");
}

}  // namespace keane
