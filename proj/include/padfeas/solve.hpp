#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padfeas/certificate.hpp"
#include "padfeas/intlinalg.hpp"
#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"

namespace padfeas {

enum class Feasibility { Feasible, Infeasible, Unknown };

std::string feasibility_name(Feasibility a);

/**
 * Outcome of a decision procedure. Feasible verdicts from certificate-backed
 * solvers carry a Certificate that verify_certificate (or, for systems,
 * verify_system_certificate) accepts against the original input; Infeasible
 * verdicts carry one when the obstruction is expressible (valuation
 * mismatches, nonzero constants, failed symbol conditions) and otherwise
 * explain themselves in `reason`. Unknown appears only where a solver's
 * documented precision cap was hit or no decision procedure applies.
 */
struct FeasibilityVerdict {
    Feasibility answer = Feasibility::Unknown;
    std::optional<Certificate> cert;
    std::string reason;
};

// Polynomials with at most one term: zero (everything is a root), nonzero
// constants (nothing is), and monomials (a root needs some variable with a
// positive exponent set to 0). Rejects polynomials with more terms.
FeasibilityVerdict feas_trivial(const SparsePoly& f, const Int& p);

// Two-term polynomial whose torus roots are exactly the solutions of
// x^d = c: for d > 0 that is den(c)*x^d - num(c), for d < 0 the reciprocal
// form den(c) - num(c)*x^{-d}. Certificates from feas_binomial verify
// against it. Rejects c = 0, d = 0, and d outside the long range.
SparsePoly canonical_binomial(const Rat& c, const Int& d);

/**
 * Decides x^d = c over Q_p. Valuation divisibility d | ord_p(c) first
 * (Infeasible with a valuation_obstruction certificate when violated), then
 * the unit part's d-th-power test in (Z/p^{2k+1})^* with k = ord_p(d):
 * cyclic order condition for odd p, the {+-1} x <5> two-part test for p = 2.
 * Feasible verdicts carry a binomial_witness certificate. Witness extraction
 * throws std::runtime_error when it would need a discrete logarithm beyond
 * the supported scale (p^{2k+1} above the brute-scan cap with no structural
 * shortcut); the decision itself is still printed in the error text.
 */
FeasibilityVerdict feas_binomial(const Rat& c, const Int& d, const Int& p);

/**
 * Decides x^A = c over (Q_p^*)^n, with (x^A)_j = prod_i x_i^{a_{i,j}}, via
 * the Smith factorization UAV = S: the valuation condition
 * sum_j ord_p(c_j) v_{j,i} = 0 mod s_{i,i} per column of V, then one
 * d-th-power test per diagonal entry against (c^V)_j at common precision
 * 2L+1, L = max_i ord_p(s_{i,i}). Feasible verdicts carry a unit root vector
 * certificate accepted by verify_system_certificate.
 */
FeasibilityVerdict feas_binomial_system(const Mat& a, const std::vector<Rat>& c, const Int& p);

// Diagonal quadratic c0 + c1 x1^2 + ... + cn xn^2 (nonzero constant and
// square coefficients). Decides by the closed-form symbol conditions and
// returns a quadratic_symbolic certificate (for both answers) whose
// transcript records the evaluated symbols next to the claim line.
FeasibilityVerdict feas_quadratic_diagonal(const SparsePoly& f, const Int& p);

/**
 * Honest n-variate (n+1)-nomial (nonzero constant term after normalization,
 * nonsingular exponent matrix): decides existence of a root in Q_p^n. Zero
 * patterns are scanned first (variables forced to 0 leave a smaller honest
 * polynomial), then torus roots via the initial-term reduction: the full
 * support solves an integer lattice system for the valuation vector and
 * searches units at the Smith-bound depth; proper subsets (decreasing size,
 * lexicographic) reduce by a Hermite change of variables to a smaller honest
 * polynomial and recurse. Feasible verdicts carry a hensel_root certificate
 * whose transcript replays the normalization and rescaling. Infeasible means
 * the whole certificate space was exhausted.
 */
FeasibilityVerdict feas_simplex(const SparsePoly& f, const Int& p);

// Point-count shortcut for honest (n+1)-nomials with n >= 2: Feasible with
// no certificate needed when p does not divide n!V_f = |det A| or any
// coefficient and p^{n-1} >= (n!V_f)^2; nullopt otherwise (caller falls back
// to feas_simplex).
std::optional<FeasibilityVerdict> weil_guarantee(const SparsePoly& f, const Int& p);

/**
 * Univariate f with p not dividing the support discriminant: decides Q_p
 * roots by growing the mod-p^j lift trees of f and its reciprocal up to
 * ell = 4*size_measure(f)+1, where every surviving branch must close into a
 * Hensel certificate. Returns Unknown when p divides the discriminant or the
 * discriminant vanishes (defer to feas_trinomial or the oracle). Degree caps
 * of the resultant machinery propagate as errors.
 */
FeasibilityVerdict feas_univariate_generic(const SparsePoly& f, const Int& p);

/**
 * Univariate trinomial c1 + c2 x^{a2} + c3 x^{a3}. Degenerate case
 * (vanishing support discriminant, tested by exact power-product identities,
 * never by expanding): the unique degenerate root zeta reduces to the
 * binomial x^g = zeta, g = gcd(a2,a3), certified through the
 * degenerate-binomial transcript op; remaining nondegenerate roots go
 * through the bounded search. Nondegenerate case: per-edge analysis of the
 * p-adic Newton polygon — integer-slope edges only, the unramified
 * two-term-edge shortcut decides via the edge binomial, and the remaining
 * edges deepen a unit-root lift search geometrically (ell <- 2*ell) up to
 * cap max(2^14, p*size_measure(f)^2), returning Unknown at the cap.
 */
FeasibilityVerdict feas_trinomial(const SparsePoly& f, const Int& p);

/**
 * Dispatcher: routes f to the matching decision procedure by shape (term
 * count, variable count, diagonal-quadratic detection, honest-simplex
 * check), with the bounded oracle as fallback for univariate shapes the
 * specialized solvers defer on. Unknown carries the reason the shape is out
 * of scope or the cap that was hit.
 */
FeasibilityVerdict solve_auto(const SparsePoly& f, const Int& p);

}  // namespace padfeas
