#pragma once

#include <vector>

#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"

namespace padfeas::detail {

/**
 * Depth-first exploration of the mod-p^j lift tree of f: nodes at level j
 * are residue tuples r with f(r) = 0 mod p^j, children refine by r + p^j d.
 * A node is a closure when some partial derivative has exact valuation k at
 * it with 2k+1 <= j, i.e. the residue is Hensel-liftable to a genuine root.
 * Traversal order is canonical (level-1 residues and refinement digits both
 * ascending lexicographically), so "first closure" is deterministic.
 */
struct LiftConfig {
    long max_depth = 1;          // deepest level whose nodes are generated
    long node_budget = 1000000;  // total nodes generated before giving up
    bool collect_live = false;   // record residues surviving at max_depth
    long live_cap = 256;         // at most this many live residues recorded
    // Per-variable restriction of level-1 residues to units (nonzero mod p).
    // Empty = no restriction. Variables with negative exponents are always
    // restricted (non-units are outside the Laurent domain).
    std::vector<bool> unit_coords;
};

struct LiftOutcome {
    enum class Kind {
        closure_found,    // root/deriv_index/deriv_valuation/level are set
        exhausted,        // every branch died before max_depth
        live_at_depth,    // no closure, but branches survive at max_depth
        budget_exceeded,  // gave up; no exhaustion claim possible
    };
    Kind kind = Kind::exhausted;
    std::vector<Int> root;
    long level = 0;
    long deriv_index = 0;
    long deriv_valuation = 0;
    long nodes = 0;
    std::vector<std::vector<Int>> live_roots;
};

LiftOutcome lift_search(const SparsePoly& f, const Int& p, const LiftConfig& cfg);

}  // namespace padfeas::detail
