#include "padfeas/gcdfree.hpp"

#include <stdexcept>

namespace padfeas {

GcdFreeBasis gcd_free_basis(const std::vector<Int>& alphas) {
    for (const Int& a : alphas)
        if (a <= 0) throw std::invalid_argument("gcd_free_basis: inputs must be positive");
    // Pairwise refinement: while two basis entries share a factor g, replace
    // them by the cofactors and g. The product multiset is preserved and each
    // step strictly splits, so the loop reaches a pairwise-coprime fixpoint.
    std::vector<Int> basis;
    for (const Int& a : alphas)
        if (a > 1) basis.push_back(a);
    bool changed = true;
    long rounds = 0;
    while (changed) {
        if (++rounds > 100000) throw std::runtime_error("gcd_free_basis: refinement did not converge");
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                Int g;
                mpz_gcd(g.get_mpz_t(), basis[i].get_mpz_t(), basis[j].get_mpz_t());
                if (g == 1) continue;
                Int qi, qj;
                mpz_divexact(qi.get_mpz_t(), basis[i].get_mpz_t(), g.get_mpz_t());
                mpz_divexact(qj.get_mpz_t(), basis[j].get_mpz_t(), g.get_mpz_t());
                // Remove j first so index i stays valid.
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                if (qi > 1) basis.push_back(qi);
                if (qj > 1) basis.push_back(qj);
                basis.push_back(g);
                changed = true;
            }
        }
    }
    GcdFreeBasis out;
    out.gammas = basis;
    out.exps.assign(alphas.size(), std::vector<unsigned long>(basis.size(), 0));
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        Int rest = alphas[i];
        for (std::size_t j = 0; j < basis.size(); ++j) {
            unsigned long e = static_cast<unsigned long>(
                mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), basis[j].get_mpz_t()));
            out.exps[i][j] = e;
        }
        if (rest != 1) throw std::logic_error("gcd_free_basis: residue outside the basis");
    }
    return out;
}

bool power_product_is_one(const std::vector<Int>& alphas, const std::vector<Int>& us) {
    if (alphas.size() != us.size())
        throw std::invalid_argument("power_product_is_one: size mismatch");
    GcdFreeBasis b = gcd_free_basis(alphas);
    for (std::size_t j = 0; j < b.gammas.size(); ++j) {
        Int acc(0);
        for (std::size_t i = 0; i < alphas.size(); ++i)
            acc += Int(b.exps[i][j]) * us[i];
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace padfeas
