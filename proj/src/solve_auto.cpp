#include "padfeas/solve.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "search_decide.hpp"

namespace padfeas {

namespace {

constexpr long kFallbackNodeBudget = 4000000;

// Constant plus at most one squared occurrence per variable, every variable
// covered: the shape feas_quadratic_diagonal decides in closed form.
bool is_diagonal_quadratic(const SparsePoly& f) {
    if (f.nvars == 0) return false;
    bool has_constant = false;
    std::vector<bool> squared(f.nvars, false);
    for (const Term& t : f.terms) {
        int nz = 0;
        unsigned var = 0;
        for (unsigned i = 0; i < f.nvars; ++i) {
            if (t.exps[i] != 0) {
                ++nz;
                var = i;
            }
        }
        if (nz == 0) {
            has_constant = true;
        } else if (nz == 1 && t.exps[var] == 2 && !squared[var]) {
            squared[var] = true;
        } else {
            return false;
        }
    }
    if (!has_constant) return false;
    for (unsigned i = 0; i < f.nvars; ++i)
        if (!squared[i]) return false;
    return true;
}

// Last-resort decision for univariate shapes the specialized solvers defer
// on: normalize away a zero root or Laurent terms, then run the escalating
// dual lift-tree search.
FeasibilityVerdict univariate_fallback(const SparsePoly& f, const Int& p) {
    long e0 = min_exponent(f);
    if (e0 >= 1) {
        Certificate cert;
        cert.kind = CertKind::hensel_root;
        cert.prime = p;
        cert.ell = 1;
        cert.root = {Int(0)};
        cert.transcript = {"zero-set 1"};
        return {Feasibility::Feasible, cert, "x divides every term, so 0 is a root"};
    }
    std::vector<std::string> ops;
    SparsePoly work = f;
    if (e0 < 0) {
        ops.push_back("translate");
        work = translate_min_exponents(f);
    }
    long size = size_measure_p(work, p);
    Int depth_cap = std::max(Int(16384), Int(p * size * size));
    return detail::dual_tree_decide(work, p, ops, depth_cap, kFallbackNodeBudget);
}

}  // namespace

FeasibilityVerdict solve_auto(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);  // primality check
    if (f.term_count() <= 1) return feas_trivial(f, p);

    if (f.nvars == 1) {
        if (f.term_count() == 3) return feas_trinomial(f, p);
        FeasibilityVerdict v = feas_univariate_generic(f, p);
        if (v.answer != Feasibility::Unknown) return v;
        FeasibilityVerdict w = univariate_fallback(f, p);
        if (w.answer == Feasibility::Unknown && w.reason.empty()) w.reason = v.reason;
        return w;
    }

    if (is_diagonal_quadratic(f)) return feas_quadratic_diagonal(f, p);

    if (f.term_count() == static_cast<std::size_t>(f.nvars) + 1) {
        if (auto shortcut = weil_guarantee(f, p)) return *shortcut;
        return feas_simplex(f, p);  // invalid_argument on dishonest supports
    }

    return {Feasibility::Unknown, std::nullopt,
            "no decision procedure covers this shape (multivariate, not a "
            "diagonal quadratic, term count differs from nvars+1)"};
}

}  // namespace padfeas
