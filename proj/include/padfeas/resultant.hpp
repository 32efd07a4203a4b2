#pragma once

#include "padfeas/intlinalg.hpp"
#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"

namespace padfeas {

// Sylvester matrix of (f, g) at formal degrees (d, dprime): a
// (d+dprime) x (d+dprime) matrix whose first dprime rows carry f's
// coefficients a_0..a_d ascending, each row shifted one column right of the
// previous, and whose last d rows carry g's coefficients b_0..b_dprime the
// same way. Requires deg f <= d, deg g <= dprime, nonnegative exponents;
// throws overflow_error when d + dprime exceeds row_cap.
Mat sylvester_matrix(const SparsePoly& f, const SparsePoly& g, long d, long dprime,
                     long row_cap = 10000);

// det of the Sylvester matrix. Vanishes iff f and g share a root (in an
// algebraic closure) when the degree-d and degree-dprime coefficients are not
// both zero.
Int resultant(const SparsePoly& f, const SparsePoly& g, long d, long dprime,
              long row_cap = 10000);

// Discriminant attached to the support of f = sum c_i x^{a_i} (m >= 2 terms):
// with g = gcd(a_i - a_1) and abar_i = (a_i - a_1)/g,
//   (-1)^{abar_m + 1} * R_{(abar_m, abar_m - abar_2)}(fbar, fbar'/x^{abar_2 - 1})
//     / c_m^{abar_m - abar_{m-1}}.
// The sign is normalized so the dense quadratic gives c2^2 - 4 c1 c3 and the
// coprime-trinomial closed form below agrees exactly. Vanishes iff f/x^{a_1}
// has a repeated root in an algebraic closure (as a polynomial in x^g).
Int a_discriminant(const SparsePoly& f, long row_cap = 10000);

// Closed form of the discriminant of c1 + c2 x^{a2} + c3 x^{a3} with
// 0 < a2 < a3, gcd(a2, a3) = 1, all c_i nonzero:
//   (a3-a2)^{a3-a2} * a2^{a2} * c2^{a3} - (-a3)^{a3} * c1^{a3-a2} * c3^{a2}.
Int trinomial_discriminant(const Int& c1, const Int& c2, const Int& c3, long a2, long a3);

// The unique degenerate (double) root of a coprime-exponent trinomial whose
// discriminant vanishes:
//   zeta^{a2} = -c1 a3 / ((a3-a2) c2),  zeta^{a3} = c1 a2 / ((a3-a2) c3),
// combined through A a2 + B a3 = 1. Throws when the discriminant is nonzero.
Rat degenerate_root_trinomial(const Int& c1, const Int& c2, const Int& c3, long a2, long a3);

}  // namespace padfeas
