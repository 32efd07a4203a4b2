#pragma once

#include <vector>

#include "padfeas/padic.hpp"

namespace padfeas {

// Coprime factorization base for a list of positive integers: gammas are
// pairwise coprime and > 1, and alpha_i = prod_j gammas[j]^{exps[i][j]}
// exactly (a row of zeros for alpha_i = 1). The basis is not canonical; only
// the defining properties are guaranteed.
struct GcdFreeBasis {
    std::vector<Int> gammas;
    std::vector<std::vector<unsigned long>> exps;  // alphas.size() x gammas.size()
};

// Builds a gcd-free basis by pairwise gcd refinement. Rejects inputs <= 0.
GcdFreeBasis gcd_free_basis(const std::vector<Int>& alphas);

// Decides prod_i alphas[i]^{us[i]} == 1 (exponents may be negative and huge)
// without ever forming the product: over a gcd-free basis this holds iff
// every gamma's accumulated exponent sum_i exps[i][j] * us[i] is zero.
bool power_product_is_one(const std::vector<Int>& alphas, const std::vector<Int>& us);

}  // namespace padfeas
