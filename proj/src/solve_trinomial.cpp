#include "padfeas/solve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "padfeas/gcdfree.hpp"
#include "padfeas/newton.hpp"
#include "padfeas/resultant.hpp"
#include "search_decide.hpp"

namespace padfeas {

namespace {

constexpr long kTrinomialNodeBudget = 4000000;
// Degenerate roots are materialized as explicit rationals whose numerator
// and denominator carry coefficient powers up to the reduced top exponent;
// beyond this the solver reports Unknown instead of building huge integers.
constexpr long kDegenerateExponentCap = 4096;

// Does the support discriminant of c1 + c2 y^{b2} + c3 y^{b3} (gcd(b2,b3)=1)
// vanish? Tested through the exact identity P^{b3} = Q^{b2} with
// P = -c1 b3 / ((b3-b2) c2) and Q = c1 b2 / ((b3-b2) c3) — the would-be
// values of zeta^{b2} and zeta^{b3} at the double root — so no coefficient
// power is ever expanded.
bool discriminant_vanishes(const Int& c1, const Int& c2, const Int& c3, long b2, long b3) {
    Rat pv(Int(-c1 * b3), Int((b3 - b2) * c2));
    Rat qv(Int(c1 * b2), Int((b3 - b2) * c3));
    pv.canonicalize();
    qv.canonicalize();
    int sign_l = (b3 % 2 != 0 && pv < 0) ? -1 : 1;
    int sign_r = (b2 % 2 != 0 && qv < 0) ? -1 : 1;
    if (sign_l != sign_r) return false;
    std::vector<Int> alphas = {abs(pv.get_num()), abs(pv.get_den()),
                               abs(qv.get_num()), abs(qv.get_den())};
    std::vector<Int> us = {Int(b3), Int(-b3), Int(-b2), Int(b2)};
    return power_product_is_one(alphas, us);
}

}  // namespace

FeasibilityVerdict feas_trinomial(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);  // primality check
    if (f.nvars != 1 || f.term_count() != 3)
        throw std::invalid_argument("feas_trinomial: univariate trinomial required");

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

    const Int c1 = work.terms[0].coeff;
    const Int c2 = work.terms[1].coeff;
    const Int c3 = work.terms[2].coeff;
    const long a2 = work.terms[1].exps[0];
    const long a3 = work.terms[2].exps[0];
    const long g = std::gcd(a2, a3);
    const long b2 = a2 / g, b3 = a3 / g;

    const long size = size_measure_p(work, p);
    const long depth0 = 2 * size + 3;
    const Int depth_cap = std::max(Int(16384), Int(p * size * size));

    if (discriminant_vanishes(c1, c2, c3, b2, b3)) {
        // Degenerate: the reduced trinomial has a unique double root zeta,
        // and x^g = zeta accounts for it. Decide that binomial exactly;
        // remaining simple roots go through the bounded search.
        if (b3 > kDegenerateExponentCap)
            return {Feasibility::Unknown, std::nullopt,
                    "degenerate case with reduced exponent beyond the "
                    "materialization cap"};
        Rat zeta = degenerate_root_trinomial(c1, c2, c3, b2, b3);
        std::optional<FeasibilityVerdict> bin;
        try {
            bin = feas_binomial(zeta, Int(g), p);
        } catch (const std::runtime_error&) {
            // Witness extraction hit its scale cap after deciding Feasible:
            // the double root exists but resists Hensel certification (it is
            // a double root), so report it honestly without a certificate.
            return {Feasibility::Feasible, std::nullopt,
                    "the double root of the reduced trinomial is a g-th power "
                    "(witness beyond the extraction scale cap)"};
        }
        if (bin->answer == Feasibility::Feasible && bin->cert) {
            Certificate cert = *bin->cert;
            cert.transcript = ops;
            long t = ord_p(zeta, p).value() / g;
            if (t != 0) cert.transcript.push_back("rescale " + std::to_string(t));
            cert.transcript.push_back("degenerate-binomial");
            return {Feasibility::Feasible, cert,
                    "the double root of the reduced trinomial is a g-th power"};
        }
        FeasibilityVerdict rest =
            detail::dual_tree_decide(work, p, ops, depth_cap, kTrinomialNodeBudget);
        if (rest.answer == Feasibility::Infeasible)
            rest.reason =
                "the degenerate binomial has no root and the residual search "
                "exhausts";
        return rest;
    }

    // Nondegenerate: roots are confined to the valuations of the lower
    // Newton polygon's edges; analyze each edge's valuation class.
    LowerHull hull = build_lower_hull(work, p);
    bool any_unknown = false;
    for (const HullEdge& edge : hull.edges) {
        Rat val = -edge.slope;
        if (val.get_den() != 1) continue;  // fractional valuation: no Q_p roots here
        if (!val.get_num().fits_slong_p())
            throw std::runtime_error("feas_trinomial: edge valuation exceeds long range");
        long v = val.get_num().get_si();

        bool must_be_feasible = false;
        if (edge.lower_poly.term_count() == 2 &&
            !mpz_divisible_p(Int(edge.a1 - edge.a0).get_mpz_t(), p.get_mpz_t())) {
            // Two-term edge with gap prime to p: the number of roots at this
            // valuation equals the number of roots of the edge binomial.
            long ea = edge.lower_poly.terms[0].exps[0];
            long eb = edge.lower_poly.terms[1].exps[0];
            Rat c(-edge.lower_poly.terms[0].coeff, edge.lower_poly.terms[1].coeff);
            c.canonicalize();
            bool feasible;
            try {
                feasible = feas_binomial(c, Int(eb - ea), p).answer == Feasibility::Feasible;
            } catch (const std::runtime_error&) {
                feasible = true;  // witness extraction hit its scale cap; the
                                  // decision itself had already succeeded
            }
            if (!feasible) continue;  // no root at this valuation
            must_be_feasible = true;
        }

        std::vector<std::string> eops = ops;
        eops.push_back("rescale " + std::to_string(v));
        SparsePoly rescaled = rescale(work, p, v).g;
        long depth = depth0;
        bool edge_done = false;
        while (!edge_done) {
            detail::LiftConfig cfg;
            cfg.max_depth = depth;
            cfg.node_budget = kTrinomialNodeBudget;
            cfg.unit_coords.assign(1, true);
            detail::LiftOutcome out = detail::lift_search(rescaled, p, cfg);
            if (out.kind == detail::LiftOutcome::Kind::closure_found)
                return {Feasibility::Feasible,
                        detail::lift_certificate(p, out, std::move(eops)),
                        "unit root at the edge valuation"};
            if (out.kind == detail::LiftOutcome::Kind::budget_exceeded)
                throw std::runtime_error("feas_trinomial: node budget exceeded");
            if (out.kind == detail::LiftOutcome::Kind::exhausted) {
                if (must_be_feasible)
                    throw std::logic_error(
                        "feas_trinomial: edge binomial is solvable but the "
                        "valuation class exhausted");
                edge_done = true;  // no root at this valuation
            } else {
                if (Int(depth) * 2 > depth_cap) {
                    any_unknown = true;
                    edge_done = true;
                } else {
                    depth *= 2;
                }
            }
        }
    }
    if (any_unknown)
        return {Feasibility::Unknown, std::nullopt,
                "an edge valuation class is still alive at the depth cap"};
    return {Feasibility::Infeasible, std::nullopt,
            "every Newton polygon edge valuation class is exhausted"};
}

}  // namespace padfeas
