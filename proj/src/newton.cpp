#include "padfeas/newton.hpp"

#include <stdexcept>
#include <utility>

namespace padfeas {

namespace {

struct Pt {
    Int x;
    Int y;
};

// Cross product (a - o) x (b - o); positive when o->a->b turns left.
Int cross(const Pt& o, const Pt& a, const Pt& b) {
    return Int((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
}

// Exact test for (x, y) lying on the closed segment from (e.a0, e.v0) to
// (e.a1, e.v1); the segment is never vertical.
bool on_edge(const HullEdge& e, long x, const Int& y) {
    if (x < e.a0 || x > e.a1) return false;
    Int lhs = (Int(x) - e.a0) * (e.v1 - e.v0);
    Int rhs = (y - e.v0) * (Int(e.a1) - e.a0);
    return lhs == rhs;
}

}  // namespace

LowerHull build_lower_hull(const SparsePoly& f, const Int& p) {
    if (f.is_zero()) throw std::invalid_argument("build_lower_hull: zero polynomial");
    if (f.nvars > 1) throw std::invalid_argument("build_lower_hull: polynomial is not univariate");
    std::vector<Pt> pts;
    pts.reserve(f.terms.size());
    for (const Term& t : f.terms) {
        long a = t.exps.empty() ? 0 : t.exps[0];
        if (a < 0) throw std::invalid_argument("build_lower_hull: negative exponent");
        pts.push_back(Pt{Int(a), ord_p(t.coeff, p).value()});
    }
    // Terms are already sorted by ascending exponent (canonical form), with
    // distinct exponents, so pts is strictly x-increasing: run a monotone
    // chain keeping only strictly-convex lower vertices.
    std::vector<Pt> hull;
    for (const Pt& q : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0)
            hull.pop_back();
        hull.push_back(q);
    }
    LowerHull out;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        HullEdge e;
        e.a0 = static_cast<long>(hull[i].x.get_si());
        e.v0 = hull[i].y;
        e.a1 = static_cast<long>(hull[i + 1].x.get_si());
        e.v1 = hull[i + 1].y;
        e.slope = Rat(e.v1 - e.v0, Int(e.a1 - e.a0));
        e.slope.canonicalize();
        e.horiz_length = e.a1 - e.a0;
        std::vector<Term> on;
        for (const Term& t : f.terms) {
            long a = t.exps.empty() ? 0 : t.exps[0];
            if (on_edge(e, a, ord_p(t.coeff, p).value())) on.push_back(t);
        }
        e.lower_poly = SparsePoly::from_terms(f.nvars, on, false);
        out.edges.push_back(std::move(e));
    }
    return out;
}

std::vector<SlopeRun> root_valuations(const SparsePoly& f, const Int& p) {
    LowerHull hull = build_lower_hull(f, p);
    std::vector<SlopeRun> runs;
    runs.reserve(hull.edges.size());
    for (const HullEdge& e : hull.edges) {
        SlopeRun r;
        r.valuation = Rat(-e.slope);
        r.valuation.canonicalize();
        r.count = e.horiz_length;
        runs.push_back(std::move(r));
    }
    return runs;
}

PolygonClass classify(const SparsePoly& f, const Int& p) {
    LowerHull hull = build_lower_hull(f, p);
    PolygonClass c;
    c.flat = hull.edges.size() == 1;
    c.generic = true;
    c.ramified = false;
    for (const HullEdge& e : hull.edges) {
        if (e.lower_poly.term_count() > 2) c.generic = false;
        const auto& ts = e.lower_poly.terms;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                long ai = ts[i].exps.empty() ? 0 : ts[i].exps[0];
                long aj = ts[j].exps.empty() ? 0 : ts[j].exps[0];
                Int gap(aj - ai);
                if (mpz_divisible_p(gap.get_mpz_t(), p.get_mpz_t()) != 0)
                    c.ramified = true;
            }
        }
    }
    return c;
}

}  // namespace padfeas
