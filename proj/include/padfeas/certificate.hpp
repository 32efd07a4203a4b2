#pragma once

#include <string>
#include <vector>

#include "padfeas/intlinalg.hpp"
#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"

namespace padfeas {

enum class CertKind { hensel_root, binomial_witness, valuation_obstruction, quadratic_symbolic };

std::string cert_kind_name(CertKind k);
CertKind cert_kind_from_name(const std::string& name);

/**
 * Machine-checkable feasibility evidence. `transcript` records the reduction
 * steps that turn the original polynomial into the one the final check runs
 * against; verify_certificate replays them and recomputes everything — the
 * transcript is instructions, never trusted data.
 *
 * Kinds:
 *  - hensel_root: `root` is one residue per variable mod prime^ell; the
 *    replayed polynomial vanishes at it mod prime^ell, its deriv_index-th
 *    partial has exact valuation deriv_valuation = k, and 2k+1 <= ell.
 *  - binomial_witness: the replayed polynomial is a two-term equation
 *    x^d = c; `root` holds a unit w with w^d = unit-part(c) mod prime^ell,
 *    ell >= 2 ord_p(d) + 1, and d | ord_p(c).
 *  - valuation_obstruction: the replayed polynomial is a nonzero constant or
 *    a binomial x^d = c with d not dividing ord_p(c): no root exists.
 *  - quadratic_symbolic: the polynomial is a diagonal quadratic; the verdict
 *    line in the transcript matches a recomputation of the closed-form rules.
 */
struct Certificate {
    CertKind kind = CertKind::hensel_root;
    Int prime = Int(2);
    long ell = 1;                  // residues live mod prime^ell
    std::vector<Int> root;
    long deriv_index = 0;          // hensel_root: which partial closes the lift
    long deriv_valuation = 0;      // hensel_root: its exact valuation at the root
    std::vector<std::string> transcript;
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

/**
 * Result of replaying the transcript ops against f: the polynomial the final
 * check applies to, whether the steps force every root coordinate to be a
 * p-adic unit, and which final coordinates are pinned to zero.
 *
 * Ops (tokens space-separated, vectors comma-separated, variables 1-based):
 *   reciprocal | rescale t1,...,tn | translate | zero-set i1,... |
 *   flip i1,... | mono n u11,...,unn | drop-free-vars | scale-root n/d |
 *   divide-sq1 | degenerate-binomial
 * Every op maps a root of the new polynomial back to a root of the previous
 * one, so a verified final root certifies feasibility of the original f.
 */
struct TranscriptReplay {
    SparsePoly poly;
    bool require_units = false;
    std::vector<bool> forced_zero;
};

TranscriptReplay replay_transcript(const SparsePoly& f, const Int& p,
                                   const std::vector<std::string>& transcript);

/**
 * Newton lift of a residue root: given f(root0) = 0 mod p^{2k+1} and the
 * deriv_index-th partial having exact valuation k at root0, returns root mod
 * p^{target_ell} with f(root) = 0 mod p^{target_ell} and root = root0 mod
 * p^{k+1}. Precondition violations throw invalid_argument.
 */
std::vector<Int> hensel_lift(const SparsePoly& f, const std::vector<Int>& root0,
                             long deriv_index, long deriv_valuation, const Int& p,
                             long target_ell);

// Closed-form solvability of a diagonal quadratic (a constant plus one-var
// square terms) over Q_p: valuation/Legendre test for one square, Hilbert
// symbol comparisons for two or three, always solvable for four or more.
// This is the condition quadratic_symbolic certificates are checked against.
// Rejects polynomials of any other shape.
bool quadratic_symbolic_condition(const SparsePoly& f, const Int& p);

// Total check: true iff the certificate is well-formed and its invariants
// hold by direct modular recomputation against f. Never throws.
bool verify_certificate(const SparsePoly& f, const Int& p, const Certificate& cert);

// Certificate check for the system x^A = c over (Q_p*)^n: the Smith-form
// valuation condition plus a unit witness vector mod p^ell with
// ell >= 2 max_i ord_p(s_ii) + 1. Never throws.
bool verify_system_certificate(const Mat& a, const std::vector<Rat>& c, const Int& p,
                               const Certificate& cert);

}  // namespace padfeas
