#include "padfeas/solve.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lift_search.hpp"

namespace padfeas {

namespace {

// Total nodes any one unit-root search may generate before the solver gives
// up with a resource error (never a wrong verdict).
constexpr long kSimplexNodeBudget = 4000000;

long coeff_ord(const Int& c, const Int& p) { return ord_p(c, p).value(); }

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// ceil(a / b) for b > 0.
long ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!q.fits_slong_p()) throw std::runtime_error("feas_simplex: valuation exceeds long range");
    return q.get_si();
}

long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::runtime_error("feas_simplex: valuation exceeds long range");
    return a.get_si();
}

// Witness that the input has a root in the torus (Q_p^*)^m: rescaling the
// polynomial by p^{v_i} x_i leaves a genuine unit root, and the Smith bound
// of the exponent differences caps the closing derivative valuation, so a
// unit search of the rescaled polynomial to that depth must close into a
// Hensel certificate.
struct ToricWitness {
    std::vector<long> v;
};

// max_i ord_p(s_ii) over the Smith normal form of the exponent differences.
// At any unit root of a rescaled instance whose minimal term valuation is 0,
// the logarithmic gradient is the term-value vector times the difference
// matrix (transposed), and unimodular factors preserve minimal valuations,
// so some partial derivative has valuation at most this bound.
long smith_depth_bound(const Mat& a, const Int& p) {
    SmithFactorization snf = smith_normal_form(a);
    long cap = 0;
    for (std::size_t i = 0; i < a.rows; ++i)
        cap = std::max(cap, coeff_ord(snf.s.at(i, i), p));
    return cap;
}

// One window of valuation profiles is enumerated exhaustively; anything
// larger would make the search space degenerate into a subset instance.
constexpr long kProfileCap = 1 << 21;

/**
 * Decides whether g (m variables, m+1 terms, nonsingular difference matrix)
 * has a root with all coordinates in Q_p^*.
 *
 * Any torus root's coordinate valuations v give the terms a valuation
 * profile whose minimum is attained at least twice. With L the Smith bound
 * of the difference matrix, some partial derivative at the (rescaled) unit
 * root has valuation k <= L, so the root closes a Hensel search at depth
 * 2L+1. Two cases cover every profile:
 *
 *  - Every term valuation is within 2L+1 of the minimum. Then the profile
 *    is one of finitely many: each choice solves an integer lattice system
 *    for v, and a unit search of the rescaled polynomial to depth 2L+1 per
 *    integral solution is complete.
 *
 *  - Some term sits more than 2L+1 above the minimum. The visible terms
 *    then form a root of their sub-sum to precision past 2k+1, which Hensel
 *    turns into an exact unit root: the sub-sum is a smaller instance of the
 *    same problem after a Hermite change of variables. Conversely a root of
 *    the smaller instance extends to a root of g, because the leftover
 *    terms can be pushed above the closing precision through the free
 *    coordinates (every subset of an affinely independent support is a
 *    face), after which the full instance closes at depth 2L+1 again.
 */
std::optional<ToricWitness> toric_decide(const SparsePoly& g, const Int& p) {
    const std::size_t m = g.nvars;
    if (g.term_count() != m + 1)
        throw std::logic_error("toric_decide: square instance expected");

    // Exponent differences vs the first canonical term; column j <-> term j+1.
    Mat a = exponent_matrix(g, 0);
    const long lam = smith_depth_bound(a, p);
    const long depth = 2 * lam + 1;

    // --- bounded window: all m+1 term valuations within depth of the min ---
    // Anchor the profile at the base term's fixed valuation t0 and try every
    // assignment of the other terms inside [t0-depth, t0+depth]; each one
    // pins v through ord(c_j) + a_j . v = that_j, i.e. A^T v = w.
    {
        Mat mt = transpose(a);
        Int d = det(mt);
        if (d == 0) throw std::logic_error("toric_decide: singular difference matrix");
        const long t0 = coeff_ord(g.terms[0].coeff, p);
        const long width = 2 * depth + 1;
        {
            double total = 1;
            for (std::size_t j = 0; j < m; ++j) total *= width;
            if (total > static_cast<double>(kProfileCap))
                throw std::runtime_error(
                    "feas_simplex: valuation window too large to enumerate");
        }
        std::vector<long> profile(m, t0 - depth);
        for (bool more = true; more;) {
            // The minimum must be shared by two terms for cancellation.
            long mn = t0;
            for (long t : profile) mn = std::min(mn, t);
            int hits = mn == t0 ? 1 : 0;
            for (long t : profile) hits += t == mn ? 1 : 0;
            if (hits >= 2) {
                bool integral = true;
                std::vector<long> v(m, 0);
                std::vector<Int> w;
                w.reserve(m);
                for (std::size_t j = 1; j <= m; ++j)
                    w.push_back(Int(profile[j - 1] - coeff_ord(g.terms[j].coeff, p)));
                for (std::size_t j = 0; j < m && integral; ++j) {
                    Mat mj = mt;
                    for (std::size_t i = 0; i < m; ++i) mj.at(i, j) = w[i];
                    Int num = det(mj);
                    if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) {
                        integral = false;
                        break;
                    }
                    v[j] = to_long(num / d);
                }
                if (integral) {
                    SparsePoly rescaled = rescale(g, p, v).g;
                    detail::LiftConfig cfg;
                    cfg.max_depth = depth;
                    cfg.node_budget = kSimplexNodeBudget;
                    cfg.unit_coords.assign(m, true);
                    detail::LiftOutcome out = detail::lift_search(rescaled, p, cfg);
                    if (out.kind == detail::LiftOutcome::Kind::closure_found)
                        return ToricWitness{v};
                    if (out.kind == detail::LiftOutcome::Kind::budget_exceeded)
                        throw std::runtime_error(
                            "feas_simplex: unit search exceeded its node budget");
                    // exhausted or live without closure: no root at this v (a
                    // genuine unit root would have closed by the depth bound).
                }
            }
            // odometer
            more = false;
            for (std::size_t j = 0; j < m; ++j) {
                if (profile[j] < t0 + depth) {
                    ++profile[j];
                    for (std::size_t i = 0; i < j; ++i) profile[i] = t0 - depth;
                    more = true;
                    break;
                }
            }
        }
    }

    // --- proper subsets, decreasing size, lexicographic ---------------------
    for (std::size_t s = m; s >= 2; --s) {
        std::vector<std::size_t> t(s);
        for (std::size_t i = 0; i < s; ++i) t[i] = i;
        while (true) {
            const std::size_t b = t[0];
            std::vector<bool> in_t(m + 1, false);
            for (std::size_t j : t) in_t[j] = true;

            // All exponent differences vs the base term, subset columns first.
            std::vector<std::size_t> order;
            for (std::size_t i = 1; i < s; ++i) order.push_back(t[i]);
            for (std::size_t j = 0; j <= m; ++j)
                if (!in_t[j]) order.push_back(j);
            Mat diffs(m, m);
            for (std::size_t q = 0; q < m; ++q) {
                std::size_t j = order[q];
                for (std::size_t i = 0; i < m; ++i)
                    diffs.at(i, q) =
                        Int(g.terms[j].exps[i]) - Int(g.terms[b].exps[i]);
            }
            HermiteFactorization hf = hermite_normal_form(diffs);

            // Reduced instance: the subset's differences live in the first
            // s-1 coordinates of the transformed lattice.
            std::vector<Term> sub;
            sub.push_back(Term{g.terms[b].coeff, std::vector<long>(s - 1, 0)});
            for (std::size_t q = 0; q + 1 < s; ++q) {
                std::vector<long> e(s - 1);
                for (std::size_t i = 0; i + 1 < s; ++i) e[i] = to_long(hf.h.at(i, q));
                sub.push_back(Term{g.terms[order[q]].coeff, std::move(e)});
            }
            SparsePoly gsub =
                SparsePoly::from_terms(static_cast<unsigned>(s - 1), std::move(sub), false);

            if (auto rec = toric_decide(gsub, p)) {
                // Extend the subset root: coordinates s-1..m-1 of the
                // transformed lattice are free; pick their valuations so
                // every leftover term lands at least gap above the subset's
                // minimal valuation. The leftover columns are upper
                // triangular with positive pivots, so a greedy pass works.
                const long gap = 2 * lam + 2;
                long m0 = 0;  // base term contributes relative valuation 0
                for (std::size_t q = 0; q + 1 < s; ++q) {
                    Int rel = coeff_ord(g.terms[order[q]].coeff, p) -
                              coeff_ord(g.terms[b].coeff, p);
                    for (std::size_t i = 0; i + 1 < s; ++i)
                        rel += hf.h.at(i, q) * rec->v[i];
                    m0 = std::min(m0, to_long(rel));
                }
                std::vector<long> tail(m - (s - 1), 0);
                for (std::size_t q = s - 1; q < m; ++q) {
                    Int partial = coeff_ord(g.terms[order[q]].coeff, p) -
                                  coeff_ord(g.terms[b].coeff, p);
                    for (std::size_t i = 0; i + 1 < s; ++i)
                        partial += hf.h.at(i, q) * rec->v[i];
                    for (std::size_t i = s - 1; i < q; ++i)
                        partial += hf.h.at(i, q) * tail[i - (s - 1)];
                    tail[q - (s - 1)] =
                        ceil_div(Int(m0 + gap) - partial, hf.h.at(q, q));
                }
                // Back to the original coordinates: v_total = U^T (v' ++ t).
                std::vector<long> vy;
                vy.insert(vy.end(), rec->v.begin(), rec->v.end());
                vy.insert(vy.end(), tail.begin(), tail.end());
                std::vector<long> vx(m, 0);
                for (std::size_t i = 0; i < m; ++i) {
                    Int acc = 0;
                    for (std::size_t k = 0; k < m; ++k) acc += hf.u.at(k, i) * vy[k];
                    vx[i] = to_long(acc);
                }
                return ToricWitness{vx};
            }

            // next lexicographic s-subset of {0..m}
            std::size_t i = s;
            while (i > 0 && t[i - 1] == m - (s - i)) --i;
            if (i == 0) break;
            ++t[i - 1];
            for (std::size_t j2 = i; j2 < s; ++j2) t[j2] = t[j2 - 1] + 1;
        }
    }
    return std::nullopt;
}

// Turn a toric witness for the replayed polynomial into a full certificate:
// append the rescale, rerun the unit search at the Smith depth bound (the
// rescale preserves exponents, so the bound survives the replay), and
// package the closure it must find.
Certificate close_certificate(const SparsePoly& f, const Int& p,
                              std::vector<std::string> ops, const ToricWitness& wit) {
    ops.push_back("rescale " + join_longs(wit.v));
    TranscriptReplay replay = replay_transcript(f, p, ops);
    detail::LiftConfig cfg;
    cfg.max_depth = 2 * smith_depth_bound(exponent_matrix(replay.poly, 0), p) + 1;
    cfg.node_budget = kSimplexNodeBudget;
    cfg.unit_coords.assign(replay.poly.nvars, true);
    detail::LiftOutcome out = detail::lift_search(replay.poly, p, cfg);
    if (out.kind == detail::LiftOutcome::Kind::budget_exceeded)
        throw std::runtime_error("feas_simplex: unit search exceeded its node budget");
    if (out.kind != detail::LiftOutcome::Kind::closure_found)
        throw std::logic_error("feas_simplex: witnessed valuation class failed to close");
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

}  // namespace

FeasibilityVerdict feas_simplex(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);  // primality check
    const unsigned n = f.nvars;
    if (n < 1) throw std::invalid_argument("feas_simplex: at least one variable required");
    if (f.term_count() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument(
            "feas_simplex: expected exactly nvars+1 terms (an honest polynomial)");
    // A variable dividing every term makes its coordinate hyperplane a root
    // set; report that before judging honesty, since such inputs often have
    // dependent exponent differences.
    for (unsigned i = 0; i < n; ++i) {
        bool divides = true;
        for (const Term& t : f.terms)
            if (t.exps[i] < 1) divides = false;
        if (!divides) continue;
        Certificate cert;
        cert.kind = CertKind::hensel_root;
        cert.prime = p;
        cert.ell = 1;
        cert.root.assign(n, Int(0));
        cert.transcript = {"zero-set " + std::to_string(i + 1)};
        return {Feasibility::Feasible, cert,
                "x" + std::to_string(i + 1) +
                    " divides every term, so its zero hyperplane consists of "
                    "roots; divide it out to get an honest instance"};
    }
    {
        Mat a = exponent_matrix(f, 0);
        if (det(a) == 0)
            throw std::invalid_argument(
                "feas_simplex: exponent differences are linearly dependent "
                "(not an honest polynomial)");
    }

    // Roots are partitioned by which coordinates vanish. Each pattern leaves
    // a smaller honest polynomial whose torus roots are decided exactly, so
    // scanning all patterns is a complete case split.
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<std::string> ops;
        if (mask != 0) {
            std::vector<long> zs;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1ul << i)) zs.push_back(static_cast<long>(i) + 1);
            ops.push_back("zero-set " + join_longs(zs));
            ops.push_back("drop-free-vars");
        }
        SparsePoly g;
        try {
            g = replay_transcript(f, p, ops).poly;
        } catch (const std::domain_error&) {
            continue;  // a zeroed variable appears with a negative exponent
        }
        if (g.is_zero()) {
            Certificate cert;
            cert.kind = CertKind::hensel_root;
            cert.prime = p;
            cert.ell = 1;
            cert.root.assign(g.nvars, Int(0));
            cert.transcript = std::move(ops);
            return {Feasibility::Feasible, cert,
                    "every term vanishes once the zeroed variables are set"};
        }
        if (g.term_count() < 2) continue;  // a single term never vanishes on the torus

        // Fewer terms than variables+1: compress the exponent lattice onto
        // the coordinates the differences actually span.
        if (g.term_count() < static_cast<std::size_t>(g.nvars) + 1) {
            Mat dm = exponent_matrix(g, 0);
            HermiteFactorization hf = hermite_normal_form(dm);
            std::ostringstream mono;
            mono << "mono " << g.nvars << ' ';
            for (std::size_t i = 0; i < hf.u.rows; ++i)
                for (std::size_t j = 0; j < hf.u.cols; ++j) {
                    if (i || j) mono << ',';
                    mono << hf.u.at(i, j).get_str();
                }
            ops.push_back(mono.str());
            ops.push_back("translate");
            ops.push_back("drop-free-vars");
            g = replay_transcript(f, p, ops).poly;
        }
        if (g.term_count() != static_cast<std::size_t>(g.nvars) + 1)
            throw std::logic_error("feas_simplex: reduction left a non-square instance");

        if (auto wit = toric_decide(g, p))
            return {Feasibility::Feasible, close_certificate(f, p, std::move(ops), *wit),
                    "unit root found after rescaling by the witnessed valuations"};
    }

    return {Feasibility::Infeasible, std::nullopt,
            "no zero pattern works and every valuation class of potential "
            "torus roots is exhausted"};
}

std::optional<FeasibilityVerdict> weil_guarantee(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);  // primality check
    const unsigned n = f.nvars;
    if (n < 2) return std::nullopt;
    if (f.term_count() != static_cast<std::size_t>(n) + 1) return std::nullopt;
    if (f.constant_term() == nullptr) return std::nullopt;
    for (const Term& t : f.terms)
        for (long e : t.exps)
            if (e < 0) return std::nullopt;
    Int vol;
    try {
        vol = normalized_volume(f);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (mpz_divisible_p(vol.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    for (const Term& t : f.terms)
        if (mpz_divisible_p(t.coeff.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    Int pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n - 1);
    if (pn < vol * vol) return std::nullopt;
    return FeasibilityVerdict{
        Feasibility::Feasible, std::nullopt,
        "point-count bound: p^(n-1) >= (n! vol)^2 with p dividing neither the "
        "normalized volume nor any coefficient forces a smooth residue root"};
}

}  // namespace padfeas
