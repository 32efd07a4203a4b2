#pragma once

#include "padfeas/intlinalg.hpp"
#include "padfeas/padic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace padfeas {

struct Term {
    Int coeff;               // nonzero in canonical polynomials
    std::vector<long> exps;  // length nvars; negative entries = Laurent terms

    bool operator==(const Term&) const = default;
};

/**
 * Sparse multivariate Laurent polynomial. Canonical form: terms sorted
 * lexicographically by exponent vector, exponent vectors pairwise distinct,
 * all coefficients nonzero. Immutable by convention once built.
 */
struct SparsePoly {
    unsigned nvars = 0;
    std::vector<Term> terms;

    static SparsePoly zero(unsigned nvars) { return SparsePoly{nvars, {}}; }
    static SparsePoly constant(unsigned nvars, const Int& c);
    // merge=true sums coefficients on duplicate exponent vectors (zero sums
    // dropped); merge=false treats duplicates as an input error.
    static SparsePoly from_terms(unsigned nvars, std::vector<Term> ts, bool merge);

    bool is_zero() const { return terms.empty(); }
    std::size_t term_count() const { return terms.size(); }
    const Term* constant_term() const;  // all-zero exponent vector, or nullptr
    bool is_univariate() const { return nvars == 1; }

    bool operator==(const SparsePoly&) const = default;
};

// --- measures -------------------------------------------------------------

// ceil(log2 prod_i (2+|c_i|) * prod_j (2+|a_{j,i}|)); rejects the zero polynomial.
long size_measure(const SparsePoly& f);
// size_measure + ceil(log2 p).
long size_measure_p(const SparsePoly& f, const Int& p);

// n! * V_f = |det A| for an (n+1)-term polynomial whose support spans an
// n-simplex (columns of A are the exponent vectors relative to the first
// term). Rejects other supports.
Int normalized_volume(const SparsePoly& f);

// --- evaluation and calculus ----------------------------------------------

// f(point) mod p^ell; negative exponents use modular inverses and require
// the coordinate to be a unit.
Int evaluate_mod(const SparsePoly& f, const std::vector<Int>& point, const PadicContext& ctx);

SparsePoly partial(const SparsePoly& f, unsigned i);
std::vector<SparsePoly> partials(const SparsePoly& f);

// x^{deg f} * f(1/x) for univariate f with nonnegative exponents.
SparsePoly reciprocal(const SparsePoly& f);

// --- arithmetic -----------------------------------------------------------

SparsePoly poly_add(const SparsePoly& f, const SparsePoly& g);
SparsePoly poly_neg(const SparsePoly& f);
SparsePoly poly_scale(const Int& c, const SparsePoly& f);
// Sparse product; throws when the term-count budget (10^6 intermediate
// products) is exceeded.
SparsePoly poly_mul(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul_monomial(const SparsePoly& f, const Int& c, const std::vector<long>& e);

// --- structural transforms (shared by solvers and certificate replay) ------

// x_i -> -x_i for the listed variables.
SparsePoly flip_vars(const SparsePoly& f, const std::vector<unsigned>& vars);
// x_i -> 0 for the listed variables: drops terms with a positive exponent
// there; rejects polynomials with a negative exponent on a listed variable.
SparsePoly zero_vars(const SparsePoly& f, const std::vector<unsigned>& vars);
// Keep exactly the listed term indices (canonical order indices).
SparsePoly subset_terms(const SparsePoly& f, const std::vector<std::size_t>& idxs);
// Divide by the monomial x^{(min exponent per variable)} so every variable's
// minimum exponent becomes 0. Root set over the torus is unchanged.
SparsePoly translate_min_exponents(const SparsePoly& f);
// Apply the monomial substitution x -> x^U (columns of U give the new
// exponents); requires square U with |det U| = 1 to preserve torus roots.
SparsePoly monomial_change(const SparsePoly& f, const Mat& u);

// p^{-m} * f(p^{t_1} x_1, ..., p^{t_n} x_n) with m = min resulting
// coefficient valuation (so coefficients stay integral with a unit among
// them). Returns the polynomial and m.
struct Rescaled {
    SparsePoly g;
    long removed;  // m
};
Rescaled rescale(const SparsePoly& f, const Int& p, const std::vector<long>& t);
Rescaled rescale(const SparsePoly& f, const Int& p, long t);  // univariate

// Univariate x -> x^k on exponents (k >= 1).
SparsePoly stretch_exponents(const SparsePoly& f, long k);
// d^{deg f} * f((n/d) x) for univariate f with nonnegative exponents:
// integer coefficients, roots scaled by d/n.
SparsePoly scale_root(const SparsePoly& f, const Int& n, const Int& d);
// Exact division of univariate polynomials (nonnegative exponents) over Z;
// nullopt when not exact. Dense algorithm with a degree cap.
std::optional<SparsePoly> divide_univariate_exact(const SparsePoly& f, const SparsePoly& g,
                                                  long degree_cap = 100000);

// --- univariate helpers ----------------------------------------------------

long max_exponent(const SparsePoly& f);  // univariate, nonzero
long min_exponent(const SparsePoly& f);  // univariate, nonzero
// Coefficient of x^e (univariate), zero if absent.
Int coeff_of(const SparsePoly& f, long e);

// Exponent matrix: columns exps_i - exps_base over all terms i != base,
// in canonical term order. Size nvars x (m-1).
Mat exponent_matrix(const SparsePoly& f, std::size_t base_term);

// --- parsing / serialization ------------------------------------------------

// Grammar: terms joined by +/-; a term is integer and/or x<idx>^<signed int>
// factors joined by '*' (exponent defaults to 1, coefficient to 1).
// Examples: "1 + 2*x1^2 - 3*x2^2", "x1^31", "0".
// Duplicate monomials are an error; nvars is the largest variable index seen.
SparsePoly parse_poly_text(const std::string& s);

// JSON form: {"nvars": n, "terms": [["<coeff decimal>", [e1, ..., en]], ...]}.
std::string sparse_poly_to_json(const SparsePoly& f);
SparsePoly sparse_poly_from_json(const std::string& json_text);

// Render as human-readable text (round-trips through parse_poly_text).
std::string to_string(const SparsePoly& f);

}  // namespace padfeas
