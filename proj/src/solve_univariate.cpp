#include "padfeas/solve.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "padfeas/resultant.hpp"
#include "search_decide.hpp"

namespace padfeas {

namespace {

constexpr long kGenericNodeBudget = 4000000;

}  // namespace

FeasibilityVerdict feas_univariate_generic(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);  // primality check
    if (f.nvars != 1)
        throw std::invalid_argument("feas_univariate_generic: univariate input required");
    if (f.term_count() <= 1) return feas_trivial(f, p);

    // Every exponent positive: x = 0 is a root.
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

    // Laurent terms: divide out the minimum exponent. The domain excludes 0
    // anyway, and the normalized polynomial has a nonzero constant term, so
    // the two root sets coincide.
    std::vector<std::string> ops;
    SparsePoly work = f;
    if (e0 < 0) {
        ops.push_back("translate");
        work = translate_min_exponents(f);
    }

    if (work.term_count() == 2) {
        // Binomial shape: delegate to the exact criterion and rebase its
        // certificate onto this polynomial.
        long a = work.terms[0].exps[0], b = work.terms[1].exps[0];
        Rat c(-work.terms[0].coeff, work.terms[1].coeff);
        c.canonicalize();
        FeasibilityVerdict inner = feas_binomial(c, Int(b - a), p);
        if (inner.answer == Feasibility::Feasible && inner.cert) {
            Certificate cert = *inner.cert;
            cert.transcript = ops;
            if (!ops.empty()) {
                // translate forces unit roots; move the root's valuation
                // into the polynomial so the witness is checked at a unit.
                long t = ord_p(c, p).value() / (b - a);
                cert.transcript.push_back("rescale " + std::to_string(t));
            }
            return {Feasibility::Feasible, cert, inner.reason};
        }
        if (inner.answer == Feasibility::Infeasible && inner.cert && ops.empty())
            return inner;  // the obstruction certificate checks against f as-is
        return {inner.answer, std::nullopt, inner.reason};
    }

    Int disc = a_discriminant(work);
    if (disc == 0)
        return {Feasibility::Unknown, std::nullopt,
                "the support discriminant vanishes: a degenerate root may hide "
                "below any fixed search depth"};
    if (mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t()))
        return {Feasibility::Unknown, std::nullopt,
                "p divides the support discriminant: the depth bound for "
                "nondegenerate roots does not apply"};

    // p does not divide the nonzero support discriminant: every root of work
    // (any valuation sign) is nondegenerate with derivative valuation small
    // against the size measure, so each lift-tree branch containing a root
    // closes by this depth.
    const long depth = 4 * size_measure(work) + 1;
    detail::LiftConfig cfg;
    cfg.max_depth = depth;
    cfg.node_budget = kGenericNodeBudget;

    detail::LiftOutcome direct = detail::lift_search(work, p, cfg);
    if (direct.kind == detail::LiftOutcome::Kind::closure_found)
        return {Feasibility::Feasible, detail::lift_certificate(p, direct, ops),
                "Hensel-closed branch in the direct lift tree"};
    if (direct.kind == detail::LiftOutcome::Kind::budget_exceeded)
        throw std::runtime_error("feas_univariate_generic: node budget exceeded");

    std::vector<std::string> rops = ops;
    rops.push_back("reciprocal");
    detail::LiftOutcome recip = detail::lift_search(reciprocal(work), p, cfg);
    if (recip.kind == detail::LiftOutcome::Kind::closure_found)
        return {Feasibility::Feasible, detail::lift_certificate(p, recip, std::move(rops)),
                "Hensel-closed branch in the reciprocal lift tree"};
    if (recip.kind == detail::LiftOutcome::Kind::budget_exceeded)
        throw std::runtime_error("feas_univariate_generic: node budget exceeded");

    if (direct.kind == detail::LiftOutcome::Kind::exhausted &&
        recip.kind == detail::LiftOutcome::Kind::exhausted)
        return {Feasibility::Infeasible, std::nullopt,
                "both lift trees die out: no residue sequence survives to the "
                "nondegenerate depth bound"};
    return {Feasibility::Unknown, std::nullopt,
            "a residue branch survived to the depth bound without closing"};
}

}  // namespace padfeas
