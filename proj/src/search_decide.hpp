#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "padfeas/solve.hpp"
#include "lift_search.hpp"

namespace padfeas::detail {

inline Certificate lift_certificate(const Int& p, const LiftOutcome& out,
                                    std::vector<std::string> ops) {
    Certificate cert;
    cert.kind = CertKind::hensel_root;
    cert.prime = p;
    cert.ell = out.level;
    cert.root = out.root;
    cert.deriv_index = out.deriv_index;
    cert.deriv_valuation = out.deriv_valuation;
    cert.transcript = std::move(ops);
    return cert;
}

/**
 * Escalating dual lift-tree decision for a univariate polynomial with
 * nonnegative exponents and nonzero constant term: grow the mod-p^ell
 * residue trees of f (roots of valuation >= 0) and its reciprocal (roots of
 * valuation <= 0), doubling ell until a branch closes into a Hensel
 * certificate (Feasible), both trees die out (Infeasible — unconditionally
 * sound, no residue sequence can contain a root), or both trees have been
 * abandoned at the depth or node-budget caps (Unknown). The search starts
 * shallow: around a repeated root one tree's branch count grows
 * exponentially in the depth, so the other tree must get a chance to close
 * before the expensive one eats the node budget, and a tree that exceeds
 * the budget is retired without poisoning its partner. `ops` is the
 * transcript prefix mapping the caller's original polynomial to f.
 */
inline FeasibilityVerdict dual_tree_decide(const SparsePoly& work, const Int& p,
                                           const std::vector<std::string>& ops,
                                           const Int& depth_cap, long node_budget) {
    const SparsePoly recip_work = reciprocal(work);
    long depth = 9;
    bool direct_open = true, recip_open = true;
    bool hit_budget = false;
    while (true) {
        LiftConfig cfg;
        cfg.max_depth = depth;
        cfg.node_budget = node_budget;
        if (direct_open) {
            LiftOutcome direct = lift_search(work, p, cfg);
            if (direct.kind == LiftOutcome::Kind::closure_found)
                return {Feasibility::Feasible, lift_certificate(p, direct, ops),
                        "Hensel-closed branch in the direct lift tree"};
            if (direct.kind == LiftOutcome::Kind::exhausted) direct_open = false;
            if (direct.kind == LiftOutcome::Kind::budget_exceeded) {
                direct_open = false;
                hit_budget = true;
            }
        }
        if (recip_open) {
            LiftOutcome recip = lift_search(recip_work, p, cfg);
            if (recip.kind == LiftOutcome::Kind::closure_found) {
                std::vector<std::string> rops = ops;
                rops.push_back("reciprocal");
                return {Feasibility::Feasible, lift_certificate(p, recip, std::move(rops)),
                        "Hensel-closed branch in the reciprocal lift tree"};
            }
            if (recip.kind == LiftOutcome::Kind::exhausted) recip_open = false;
            if (recip.kind == LiftOutcome::Kind::budget_exceeded) {
                recip_open = false;
                hit_budget = true;
            }
        }
        if (!direct_open && !recip_open) {
            if (hit_budget)
                return {Feasibility::Unknown, std::nullopt,
                        "a lift tree outgrew its node budget before closing"};
            return {Feasibility::Infeasible, std::nullopt,
                    "both lift trees die out before the depth cap"};
        }
        if (Int(depth) * 2 > depth_cap)
            return {Feasibility::Unknown, std::nullopt,
                    "a residue branch is still alive at the depth cap"};
        depth *= 2;
    }
}

}  // namespace padfeas::detail
