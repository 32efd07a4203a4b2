#pragma once

#include <vector>

#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"

namespace padfeas {

// One edge of the lower Newton polygon of a univariate polynomial. Vertices
// are (exponent, valuation-of-coefficient) lattice points; the inner normal of
// the edge is (-slope, 1), so roots attached to the edge have valuation
// -slope. lower_poly collects exactly the terms of f whose support point lies
// on the closed segment (shared vertices belong to both adjacent edges).
struct HullEdge {
    long a0 = 0;  // left vertex exponent
    Int v0;       // left vertex valuation
    long a1 = 0;  // right vertex exponent
    Int v1;       // right vertex valuation
    Rat slope;    // (v1 - v0) / (a1 - a0), canonicalized
    long horiz_length = 0;
    SparsePoly lower_poly;
};

struct LowerHull {
    std::vector<HullEdge> edges;  // slopes strictly increasing
};

// Lower convex hull of {(a_i, ord_p c_i)}. Requires f univariate (or
// constant) and nonzero with nonnegative exponents; a monomial yields an
// empty edge list.
LowerHull build_lower_hull(const SparsePoly& f, const Int& p);

// A run of roots sharing one valuation: `count` roots (with multiplicity, in
// an algebraic closure) of valuation `valuation`.
struct SlopeRun {
    Rat valuation;  // -(edge slope)
    long count = 0; // horizontal length of the edge
};

// Valuations of all roots of f, read off the lower hull edge by edge.
// Counts sum to (max exponent - min exponent); valuations strictly decrease.
std::vector<SlopeRun> root_valuations(const SparsePoly& f, const Int& p);

struct PolygonClass {
    bool generic = false;   // every edge's lower polynomial is a binomial
    bool flat = false;      // exactly one edge
    bool ramified = false;  // some on-edge exponent pair has gap divisible by p
};

PolygonClass classify(const SparsePoly& f, const Int& p);

}  // namespace padfeas
