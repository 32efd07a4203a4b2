#pragma once

#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace padfeas {

// Formal factored product prod_i (x^{m_i} - 1)^{e_i} with every m_i dividing
// d: the roots-of-unity image of a Boolean expression. Canonical form keeps
// m strictly increasing and e nonzero; it is the (unique) Moebius
// representation of the set of cyclotomic indices the product vanishes on,
// so structural equality decides semantic equality.
struct BinomialFactor {
    Int m;
    long e = 0;
    bool operator==(const BinomialFactor&) const = default;
};

struct BinomialProduct {
    Int d;  // ambient order: the denoted polynomial divides a power of x^d - 1
    std::vector<BinomialFactor> factors;
    bool operator==(const BinomialProduct&) const = default;
};

// 3CNF instance over 1-based variables; a literal's sign is its polarity
// (DIMACS convention), so clause {-1, 2, 3} means (not y1) or y2 or y3.
struct CnfInstance {
    int nvars = 0;
    std::vector<std::array<int, 3>> clauses;
};

/**
 * Image of a disjunction of up to three literals under the roots-of-unity
 * encoding with respect to the strictly increasing prime sequence P:
 *   false -> 1,   y_i -> x^{D/p_i} - 1,
 *   not B -> (x^D - 1) / image(B),   B1 or B2 -> lcm(image(B1), image(B2)),
 * with D = prod P. The image vanishes at a primitive t-th root of unity
 * (t | D) exactly when the assignment y_i := [p_i does not divide t]
 * satisfies the disjunction, which keeps the factored form at most 8 factors
 * long per clause. Rejects malformed literals and non-prime or unsorted P.
 */
BinomialProduct plaisted(const std::vector<int>& literals, const std::vector<Int>& P);

// Negation rule, applied formally: (x^d - 1) / b. Involutive, and maps the
// canonical form of an index set to the canonical form of its complement.
BinomialProduct plaisted_not(const BinomialProduct& b);

// Disjunction rule: lcm(a, b), computed as a union of cyclotomic index
// sets. Requires a.d == b.d; enumerates the divisors of d (guarded).
BinomialProduct plaisted_or(const BinomialProduct& a, const BinomialProduct& b);

// Sorted cyclotomic index set S(b): the t | d at whose primitive roots of
// unity b vanishes. Rejects products with an index multiplicity outside
// {0, 1} and orders d whose divisors cannot be enumerated (guarded).
std::vector<Int> cyclotomic_indices(const BinomialProduct& b);

// Inverse of cyclotomic_indices: the canonical factored form of
// prod_{t in s} Phi_t. Entries of s must divide d.
BinomialProduct from_cyclotomic_indices(const Int& d, const std::vector<Int>& s);

// The polynomial the product denotes: positive factors multiplied out,
// negative factors divided out (exact by the canonical-form invariant).
// Guarded by the degree cap.
SparsePoly expand(const BinomialProduct& b, long degree_cap = 100000);

// Whether the denoted polynomial vanishes at x mod prime p, decided without
// expansion: the multiplicity of the relevant cyclotomic is the signed count
// of factors x^m - 1 vanishing at x. Net multiplicity < 0 is a pole
// (domain_error); the encoding never produces poles at roots of unity.
// Requires p coprime to d (cyclotomics degenerate mod p | d).
bool vanishes_mod(const BinomialProduct& b, const Int& x, const Int& p);

// Per-clause images sharing the order d = prod P. Requires |P| >= nvars.
struct SatReduction {
    Int d;
    std::vector<BinomialProduct> system;
};
SatReduction reduce_3sat(const CnfInstance& cnf, const std::vector<Int>& P);

// f^2 - (x^d - 1)^2 * p for univariate f with nonnegative exponents:
// feasible over Q_p exactly when f and x^d - 1 share a Q_p root, since
// a^2 = p b^2 with a, b nonzero forces 2 ord(a) = 1 + 2 ord(b).
SparsePoly collapse_to_single(const SparsePoly& f, long d, const Int& p);

// Whether the system vanishes simultaneously at one of the d-th roots of
// unity of F_p. Requires prime p with p = 1 (mod d), which makes those
// roots distinct and in bijection (by Hensel lifting) with the d-th roots
// of unity of Q_p, so the check decides common-root existence over Q_p and,
// via symmetric functions, over C.
bool roots_of_unity_transfer_check(const std::vector<BinomialProduct>& system, const Int& d,
                                   const Int& p);

// Standard DIMACS CNF: 'c' comment lines, one "p cnf <vars> <clauses>"
// header, then whitespace-separated literals with each clause terminated by
// 0 (clauses may span lines). Clauses must have exactly three literals.
// Errors carry the 1-based line number.
CnfInstance read_dimacs(std::istream& in);

}  // namespace padfeas
