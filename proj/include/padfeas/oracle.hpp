#pragma once

#include <optional>
#include <vector>

#include "padfeas/certificate.hpp"
#include "padfeas/poly.hpp"

namespace padfeas {

// Exhaustive enumeration of the roots of f in (Z/p^ell)^nvars, ascending
// lexicographic.  Residue tuples outside the Laurent domain (a non-unit
// coordinate under a negative exponent) are skipped.  Throws when
// p^(ell*nvars) exceeds the enumeration budget.
std::vector<std::vector<Int>> roots_mod(const SparsePoly& f, const Int& p, long ell,
                                        const Int& budget = Int(100000000));

enum class OracleStatus { Feasible, InfeasibleAtDepth, Inconclusive };

struct OracleResult {
    OracleStatus status = OracleStatus::Inconclusive;
    // Hensel certificate when the lift tree closed; empty for roots found by
    // the exact rational detector (double roots admit no Hensel certificate).
    std::optional<Certificate> cert;
};

// Inclusive valuation window [lo, hi], scanned per variable.
struct OracleWindow {
    long lo = 0;
    long hi = 0;
};

// Bounded reference decision for "f = 0 solvable over Q_p" in one or two
// variables.  Scans every zero pattern of the variables and every valuation
// tuple in the window, rescales to unit solutions, and grows the tree of
// roots mod p^j up to the given depth.  A node whose partial derivative has
// exact valuation k with 2k+1 <= j certifies feasibility (Hensel); all
// branches dying refutes feasibility for this window and depth; branches
// still alive at full depth are fed to an exact rational-root detector
// (rational reconstruction of the residue), and Inconclusive is returned
// only when that also fails.  The caller must pick a window covering every
// integer root valuation (Newton polygon slopes for univariate f).  Throws
// when the lift tree exceeds node_budget.
OracleResult feas_oracle_qp(const SparsePoly& f, const Int& p, const OracleWindow& window,
                            long depth, long node_budget = 1000000);

// First satisfying assignment of the CNF in lexicographic order (variable 1
// most significant), or nullopt.  Clauses hold 1-based signed literals;
// nvars <= 20.
std::optional<std::vector<bool>> sat_brute_force(const std::vector<std::vector<int>>& clauses,
                                                 int nvars);

}  // namespace padfeas
