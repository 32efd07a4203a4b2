#pragma once

#include "padfeas/padic.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace padfeas {

// Dense integer matrix, row-major.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static Mat identity(std::size_t n);
    static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const Mat& m);

// u*a = h with u unimodular (|det u| = 1); h in row-echelon form with
// positive pivots and entries above each pivot reduced into [0, pivot).
// For nonsingular square input every column carries a pivot, so h is upper
// triangular with all entries nonnegative.
struct HermiteFactorization {
    Mat u, h;
};

// u*a*v = s with u, v unimodular, s diagonal, s_{i,i} >= 0, and
// s_{i,i} | s_{i+1,i+1} (trailing zeros for singular input).
struct SmithFactorization {
    Mat u, s, v;
};

HermiteFactorization hermite_normal_form(const Mat& m);
SmithFactorization smith_normal_form(const Mat& m);

// y_j = prod_i x_i^{m_{i,j}} mod p^ell (the map x -> x^M, one output per
// column). Coordinates needing a negative power must be units mod p^ell.
std::vector<Int> monomial_substitution(const std::vector<Int>& x, const Mat& m,
                                       const PadicContext& ctx);

}  // namespace padfeas
