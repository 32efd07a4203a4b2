#include "padfeas/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "lift_search.hpp"

namespace padfeas {

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("rat_pow: pole at zero");
        return Rat(0);
    }
    Int num = x.get_num(), den = x.get_den();
    if (e < 0) std::swap(num, den);
    unsigned long a = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), num.get_mpz_t(), a);
    mpz_pow_ui(out.get_den_mpz_t(), den.get_mpz_t(), a);
    out.canonicalize();
    return out;
}

Rat eval_exact(const SparsePoly& f, const std::vector<Rat>& x) {
    Rat acc(0);
    for (const Term& t : f.terms) {
        Rat m(t.coeff);
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0) m *= rat_pow(x[i], t.exps[i]);
        acc += m;
    }
    return acc;
}

// Candidate n/d with n = d*r mod M and |n| small, via the half-extended
// Euclidean scheme.  Soundness never rests on this: every candidate is
// checked by exact evaluation.
std::optional<Rat> rational_reconstruct(const Int& r, const Int& M) {
    Int half = (M - 1) / 2;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Int r0 = M, s0 = 0, r1 = r, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        if (r1 == 0) break;
    }
    if (s1 == 0) return std::nullopt;
    if (s1 < 0) {
        s1 = -s1;
        r1 = -r1;
    }
    return Rat(r1) / Rat(s1);
}

}  // namespace

std::vector<std::vector<Int>> roots_mod(const SparsePoly& f, const Int& p, long ell,
                                        const Int& budget) {
    if (ell < 1) throw std::invalid_argument("roots_mod: ell must be >= 1");
    PadicContext ctx(p, ell);
    Int space = 1;
    for (unsigned i = 0; i < f.nvars; ++i) {
        space *= ctx.modulus;
        if (space > budget) throw std::invalid_argument("roots_mod: enumeration budget exceeded");
    }
    std::vector<std::vector<Int>> out;
    std::vector<Int> r(f.nvars, Int(0));
    bool more = true;
    while (more) {
        try {
            if (evaluate_mod(f, r, ctx) == 0) out.push_back(r);
        } catch (const std::domain_error&) {
            // non-unit coordinate under a negative exponent: outside the domain
        }
        more = false;
        for (std::size_t i = r.size(); i-- > 0;) {
            ++r[i];
            if (r[i] < ctx.modulus) {
                more = true;
                break;
            }
            r[i] = 0;
        }
    }
    return out;
}

OracleResult feas_oracle_qp(const SparsePoly& f, const Int& p, const OracleWindow& window,
                            long depth, long node_budget) {
    if (f.nvars < 1 || f.nvars > 2)
        throw std::invalid_argument("feas_oracle_qp: univariate or bivariate input required");
    if (depth < 1) throw std::invalid_argument("feas_oracle_qp: depth must be >= 1");
    if (window.lo > window.hi) throw std::invalid_argument("feas_oracle_qp: empty window");
    PadicContext gate(p, 1);
    (void)gate;

    if (f.is_zero()) {
        Certificate c;
        c.kind = CertKind::hensel_root;
        c.prime = p;
        c.ell = 1;
        c.root.assign(f.nvars, Int(0));
        return {OracleStatus::Feasible, std::move(c)};
    }

    const unsigned n = f.nvars;
    bool live_seen = false;
    struct LiveCell {
        std::vector<unsigned> zeroed;          // 0-based zeroed variables
        std::vector<unsigned> kept;            // 0-based originals of the lift variables
        std::vector<long> vals;                // valuation tuple for kept variables
        std::vector<std::vector<Int>> roots;   // live residues mod p^depth
    };
    std::vector<LiveCell> live;

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> zset;
        std::vector<long> zset1;  // 1-based, for the transcript op
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                zset.push_back(i);
                zset1.push_back(static_cast<long>(i) + 1);
            }
        std::vector<std::string> prefix;
        if (!zset.empty()) prefix.push_back("zero-set " + join_longs(zset1));
        SparsePoly h = f;
        if (!prefix.empty()) {
            try {
                h = replay_transcript(f, p, prefix).poly;
            } catch (const std::domain_error&) {
                continue;  // zeroing a variable that appears with a negative exponent
            }
        }
        std::vector<unsigned> kept;
        {
            std::vector<bool> occurs(n, false);
            for (const Term& t : h.terms)
                for (unsigned i = 0; i < n; ++i)
                    if (t.exps[i] != 0) occurs[i] = true;
            for (unsigned i = 0; i < n; ++i)
                if (occurs[i]) kept.push_back(i);
        }
        if (kept.size() < n) prefix.push_back("drop-free-vars");
        SparsePoly g = replay_transcript(f, p, prefix).poly;
        if (g.is_zero()) {
            Certificate c;
            c.kind = CertKind::hensel_root;
            c.prime = p;
            c.ell = 1;
            c.root.assign(g.nvars, Int(0));
            c.transcript = prefix;
            return {OracleStatus::Feasible, std::move(c)};
        }
        if (g.nvars == 0) continue;  // nonzero constant: dead zero pattern
        const unsigned m = g.nvars;

        std::vector<long> v(m, window.lo);
        bool more = true;
        while (more) {
            std::vector<std::string> ops = prefix;
            ops.push_back("rescale " + join_longs(v));
            SparsePoly g2 = replay_transcript(f, p, ops).poly;

            detail::LiftConfig cfg;
            cfg.max_depth = depth;
            cfg.node_budget = node_budget;
            cfg.collect_live = true;
            cfg.unit_coords.assign(m, true);
            detail::LiftOutcome outcome = detail::lift_search(g2, p, cfg);
            switch (outcome.kind) {
                case detail::LiftOutcome::Kind::closure_found: {
                    Certificate c;
                    c.kind = CertKind::hensel_root;
                    c.prime = p;
                    c.ell = outcome.level;
                    c.root = std::move(outcome.root);
                    c.deriv_index = outcome.deriv_index;
                    c.deriv_valuation = outcome.deriv_valuation;
                    c.transcript = std::move(ops);
                    return {OracleStatus::Feasible, std::move(c)};
                }
                case detail::LiftOutcome::Kind::exhausted:
                    break;
                case detail::LiftOutcome::Kind::budget_exceeded:
                    throw std::runtime_error("feas_oracle_qp: node budget exceeded");
                case detail::LiftOutcome::Kind::live_at_depth:
                    live_seen = true;
                    live.push_back(LiveCell{zset, kept, v, std::move(outcome.live_roots)});
                    break;
            }

            more = false;
            for (std::size_t i = m; i-- > 0;) {
                if (v[i] < window.hi) {
                    ++v[i];
                    more = true;
                    break;
                }
                v[i] = window.lo;
            }
        }
    }

    // Exact rational detector: branches that never close can still encode a
    // rational double root. Around such a root the live leaves fan out, so a
    // recorded leaf need not equal the root mod p^depth — but it shares a
    // prefix with it, so reconstruction is attempted at every precision
    // level. Every candidate is confirmed by exact evaluation.
    for (const LiveCell& cell : live) {
        for (const std::vector<Int>& r : cell.roots) {
            Int modulus = 1;
            for (long j = 0; j < depth; ++j) modulus *= p;
            for (long level = depth; level >= 1; --level, modulus /= p) {
                std::vector<Rat> x(n, Rat(1));
                for (unsigned i : cell.zeroed) x[i] = 0;
                bool built = true;
                for (std::size_t j = 0; j < cell.kept.size(); ++j) {
                    std::optional<Rat> cand = rational_reconstruct(mod_reduce(r[j], modulus),
                                                                   modulus);
                    if (!cand) {
                        built = false;
                        break;
                    }
                    x[cell.kept[j]] = *cand * rat_pow(Rat(p), cell.vals[j]);
                }
                if (!built) continue;
                try {
                    if (eval_exact(f, x) == 0) return {OracleStatus::Feasible, std::nullopt};
                } catch (const std::domain_error&) {
                    continue;
                }
            }
        }
    }
    return {live_seen ? OracleStatus::Inconclusive : OracleStatus::InfeasibleAtDepth, std::nullopt};
}

std::optional<std::vector<bool>> sat_brute_force(const std::vector<std::vector<int>>& clauses,
                                                 int nvars) {
    if (nvars < 0 || nvars > 20)
        throw std::invalid_argument("sat_brute_force: variable bound exceeded");
    for (const std::vector<int>& cl : clauses)
        for (int lit : cl)
            if (lit == 0 || lit < -nvars || lit > nvars)
                throw std::invalid_argument("sat_brute_force: literal out of range");
    const unsigned long total = 1ul << nvars;
    for (unsigned long bits = 0; bits < total; ++bits) {
        std::vector<bool> y(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i) y[static_cast<std::size_t>(i)] = (bits >> (nvars - 1 - i)) & 1ul;
        bool ok = true;
        for (const std::vector<int>& cl : clauses) {
            bool sat = false;
            for (int lit : cl) {
                int var = lit > 0 ? lit : -lit;
                bool val = y[static_cast<std::size_t>(var - 1)];
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return y;
    }
    return std::nullopt;
}

}  // namespace padfeas
