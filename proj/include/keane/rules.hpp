#pragma once

#include "keane/keane.hpp"

namespace keane {

// Deterministic parameter-sequence generators.  Every inequality in a rule is
// instantiated with the smallest integer satisfying it, so identical inputs
// give identical sequences.

// n_1 given; m_k = 3(n_k + 1), n_{k+1} = 2 m_k - 1 (both strict-admissibility
// bounds met with equality).
ParamSeq rule_minimal_admissible(int K, const Int& n1 = Int(10));

// Two-bit family: m-rule 0 chooses m_k = n_k^k, 1 chooses m_k = 4 n_k;
// n-rule 0 chooses n_{k+1} = m_k^k, 1 chooses n_{k+1} = 4 m_k.
ParamSeq rule_flip(int K, int m_bit, int n_bit, const Int& n1 = Int(10));

// m-rule 0 (m_k = n_k^k) with the smallest strictly admissible continuation
// n_{k+1} = 2 m_k - 1.
ParamSeq rule_power_m(int K, const Int& n1 = Int(10));

// Seed pair (33,10) with n_2 = 65; then m_{k+1} = (n_{k+1} b_{k,3})^k + 1 and
// n_{k+2} = floor(m_{k+1}^(1/alpha)).  alpha in (0,1].
ParamSeq rule_alpha2(int K, const Rat& alpha);

// Seed pair (30,10); on even indices n_k = b_{k-1,2}^k + 1 and
// m_k = floor(n_k^(1/alpha)); on odd indices k > 1 the filler
// n_k = 2 m_{k-1}, m_k = 3 n_k.  alpha in (0,1].
ParamSeq rule_alpha3(int K, const Rat& alpha);

// m_k = 3 n_k, n_{k+1} = b_{k,2}^k, from n_1.
ParamSeq rule_generic(int K, const Int& n1 = Int(10));

// m_k = k^2 n_k, n_{k+1} = b_{k,2}^2, from n_1.
ParamSeq rule_appendix(int K, const Int& n1 = Int(10));

// Pass-through with validation.
ParamSeq rule_explicit(std::vector<std::pair<Int, Int>> pairs);

// Dispatch by tag: "minimal-admissible", "flip00", "flip01", "flip10",
// "flip11", "power-m", "alpha2", "alpha3", "generic", "appendix".
// alpha is required for the alpha rules and rejected otherwise.
ParamSeq generate_rule(const std::string& tag, int K, const std::optional<Rat>& alpha,
                       const Int& n1 = Int(10));

}  // namespace keane
