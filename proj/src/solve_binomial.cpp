#include "padfeas/solve.hpp"

#include <stdexcept>
#include <utility>

namespace padfeas {

namespace {

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Order of (Z/p^ell)^*. Only used as a Lagrange exponent, so the group being
// non-cyclic for p = 2 does not matter to its callers.
Int unit_group_order(const Int& p, long ell) {
    return pow_int(p, static_cast<unsigned long>(ell - 1)) * (p - 1);
}

/**
 * Is the unit u a d-th power in (Z/p^ell)^*? For odd p the group is cyclic
 * of order N, so the test is u^{N/gcd(d,N)} = 1. For p = 2 the group is
 * {+-1} x <5> (ell >= 3); writing d = 2^k * odd, the d-th powers are the
 * 5^{2^k m}, i.e. u = 1 mod 4 and u^{2^{ell-2-k}} = 1 (the exponent clamps
 * at 1 when k >= ell-2, which pins u = 1).
 */
bool unit_is_dth_power(const Int& u, const Int& d, const Int& p, const PadicContext& ctx) {
    if (p == 2) {
        long k = ord_p(d, p).value();
        if (k == 0) return true;  // odd powers permute the 2-group
        if (ctx.ell == 1) return true;
        if (mod_reduce(u, Int(4)) != 1) return false;
        long e = ctx.ell - 2 - k;
        if (e < 0) e = 0;
        return mod_pow(u, pow_int(Int(2), static_cast<unsigned long>(e)), ctx.modulus) == 1;
    }
    Int n = unit_group_order(p, ctx.ell);
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    return mod_pow(u, n / g, ctx.modulus) == 1;
}

// Newton iteration for w^d = u from precision 2k+1 (k = ord_p d) up to ell;
// the usual doubling m -> 2m - 2k, divisions by p^k exact by construction.
Int lift_power_root(Int w, const Int& u, const Int& d, const Int& p, long k, long ell) {
    PadicContext ctx(p, ell);
    Int pk = pow_int(p, static_cast<unsigned long>(k));
    w = ctx.reduce(w);
    Int target = ctx.reduce(u);
    for (int iter = 0; iter < 200; ++iter) {
        Int val = ctx.reduce(mod_pow(w, d, ctx.modulus) - target);
        if (val == 0) return w;
        Int der = ctx.reduce(Int(d) * mod_pow(w, d - 1, ctx.modulus));
        if (!mpz_divisible_p(val.get_mpz_t(), pk.get_mpz_t()) ||
            !mpz_divisible_p(der.get_mpz_t(), pk.get_mpz_t()))
            throw std::logic_error("binomial witness lift lost divisibility by p^k");
        Int delta = ctx.reduce(Int(val / pk) * ctx.inverse(ctx.reduce(Int(der / pk))));
        w = ctx.reduce(w - delta);
    }
    throw std::runtime_error("binomial witness lift did not converge");
}

// Largest modulus the fallback witness scan is willing to enumerate.
const long kWitnessScanCap = 4000000;

/**
 * A unit w mod p^ell with w^d = u mod p^ell, for a unit u already known to
 * be a d-th power in (Z/p^ell)^* (d >= 1, ell >= 2 ord_p(d) + 1). Three
 * constructive tiers: exponent inversion when gcd(d, #group) = 1, a base-5
 * discrete logarithm for p = 2, and a brute scan at the Hensel precision
 * 2 ord_p(d)+1 followed by a Newton lift. When p is odd, gcd(d, p-1) > 1,
 * and p^{2 ord_p(d)+1} exceeds the scan cap, extraction would need a
 * discrete logarithm beyond the supported scale and throws runtime_error.
 */
Int binomial_unit_root(const Int& u, const Int& d, const Int& p, long ell) {
    PadicContext ctx(p, ell);
    Int target = ctx.reduce(u);
    Int n = unit_group_order(p, ell);
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int w;
    if (g == 1) {
        w = mod_pow(target, mod_inverse(d, n), ctx.modulus);
    } else if (p == 2) {
        // u = 5^beta in <5> (guaranteed by the power test); peel beta bit by
        // bit using 5^{2^i} = 1 + 2^{i+2} mod 2^{i+3}, then divide the
        // exponent: w = 5^{(beta/2^k) * odd(d)^{-1}}.
        long k = ord_p(d, p).value();
        if (ell <= 2) {
            w = Int(1);
        } else {
            Int beta = 0;
            Int cur = target;
            Int pow5 = ctx.reduce(Int(5));
            for (long i = 0; i + 3 <= ell; ++i) {
                Int step = pow_int(Int(2), static_cast<unsigned long>(i + 3));
                if (mod_reduce(cur, step) != 1) {
                    beta += pow_int(Int(2), static_cast<unsigned long>(i));
                    cur = ctx.reduce(cur * ctx.inverse(pow5));
                }
                pow5 = ctx.reduce(pow5 * pow5);
            }
            if (cur != 1 || !mpz_divisible_2exp_p(beta.get_mpz_t(), static_cast<unsigned long>(k)))
                throw std::logic_error("binomial witness: unit fails its own power criterion");
            Int half = pow_int(Int(2), static_cast<unsigned long>(ell - 2));
            Int dodd = d / pow_int(Int(2), static_cast<unsigned long>(k));
            Int gamma = mod_reduce(Int(beta >> static_cast<unsigned long>(k)) *
                                       mod_inverse(dodd, half),
                                   half);
            w = mod_pow(Int(5), gamma, ctx.modulus);
        }
    } else {
        long k = ord_p(d, p).value();
        long base_ell = 2 * k + 1;
        Int base_mod = pow_int(p, static_cast<unsigned long>(base_ell));
        if (base_mod > kWitnessScanCap)
            throw std::runtime_error(
                "binomial witness extraction needs a discrete logarithm beyond the supported "
                "scale (p^(2 ord_p(d)+1) exceeds the scan cap " +
                std::to_string(kWitnessScanCap) + "); the equation is solvable over Q_p");
        Int base_target = mod_reduce(target, base_mod);
        Int found = 0;
        for (Int cand = 1; cand < base_mod; ++cand) {
            if (mod_reduce(cand, p) == 0) continue;
            if (mod_pow(cand, d, base_mod) == base_target) {
                found = cand;
                break;
            }
        }
        if (found == 0)
            throw std::logic_error("binomial witness: unit fails its own power criterion");
        w = ell > base_ell ? lift_power_root(found, target, d, p, k, ell) : found;
    }
    if (mod_pow(w, d, ctx.modulus) != target)
        throw std::logic_error("binomial witness: extraction produced a non-witness");
    return w;
}

}  // namespace

std::string feasibility_name(Feasibility a) {
    switch (a) {
        case Feasibility::Feasible: return "Feasible";
        case Feasibility::Infeasible: return "Infeasible";
        case Feasibility::Unknown: return "Unknown";
    }
    throw std::logic_error("unreachable feasibility value");
}

FeasibilityVerdict feas_trivial(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);  // rejects non-prime p
    (void)gate;
    if (f.term_count() > 1)
        throw std::invalid_argument("feas_trivial: polynomial has more than one term");
    if (f.is_zero()) {
        Certificate cert;
        cert.kind = CertKind::hensel_root;
        cert.prime = p;
        cert.ell = 1;
        cert.root.assign(f.nvars, Int(0));
        return {Feasibility::Feasible, cert, "identically zero: every point is a root"};
    }
    const Term& t = f.terms[0];
    bool constant = true;
    for (long e : t.exps)
        if (e != 0) constant = false;
    if (constant) {
        Certificate cert;
        cert.kind = CertKind::valuation_obstruction;
        cert.prime = p;
        cert.ell = 1;
        return {Feasibility::Infeasible, cert, "nonzero constant"};
    }
    for (unsigned i = 0; i < f.nvars; ++i) {
        if (t.exps[i] <= 0) continue;
        Certificate cert;
        cert.kind = CertKind::hensel_root;
        cert.prime = p;
        cert.ell = 1;
        cert.root.assign(f.nvars, Int(0));
        cert.transcript = {"zero-set " + std::to_string(i + 1)};
        return {Feasibility::Feasible, cert,
                "monomial with a positive exponent: x" + std::to_string(i + 1) + " = 0"};
    }
    return {Feasibility::Infeasible, std::nullopt,
            "monomial with only negative exponents never vanishes on its domain"};
}

SparsePoly canonical_binomial(const Rat& c, const Int& d) {
    if (c == 0) throw std::invalid_argument("canonical_binomial: c must be nonzero");
    if (d == 0) throw std::invalid_argument("canonical_binomial: d must be nonzero");
    if (!d.fits_slong_p())
        throw std::invalid_argument("canonical_binomial: exponent does not fit a term");
    long dl = d.get_si();
    Int num = c.get_num(), den = c.get_den();
    if (dl > 0)
        return SparsePoly::from_terms(1, {Term{-num, {0}}, Term{den, {dl}}}, false);
    return SparsePoly::from_terms(1, {Term{den, {0}}, Term{-num, {-dl}}}, false);
}

FeasibilityVerdict feas_binomial(const Rat& c, const Int& d, const Int& p) {
    if (c == 0) throw std::invalid_argument("feas_binomial: c must be nonzero");
    if (d == 0) throw std::invalid_argument("feas_binomial: d must be nonzero");
    if (d < 0) return feas_binomial(Rat(1) / c, -d, p);
    PadicContext gate(p, 1);
    (void)gate;

    long vc = ord_p(c, p).value();
    if (!mpz_divisible_p(Int(vc).get_mpz_t(), d.get_mpz_t())) {
        Certificate cert;
        cert.kind = CertKind::valuation_obstruction;
        cert.prime = p;
        cert.ell = 1;
        return {Feasibility::Infeasible, cert,
                "valuation obstruction: d does not divide ord_p(c) = " + std::to_string(vc)};
    }
    long k = ord_p(d, p).value();
    long ell = 2 * k + 1;
    PadicContext ctx(p, ell);
    Int u = ctx.reduce(unit_part(c, p));
    if (!unit_is_dth_power(u, d, p, ctx))
        return {Feasibility::Infeasible, std::nullopt,
                "the unit part of c is not a d-th power in (Z/p^" + std::to_string(ell) +
                    ")^*"};
    Certificate cert;
    cert.kind = CertKind::binomial_witness;
    cert.prime = p;
    cert.ell = ell;
    cert.root = {binomial_unit_root(u, d, p, ell)};
    return {Feasibility::Feasible, cert,
            "unit part is a d-th power; witness at precision 2 ord_p(d)+1"};
}

FeasibilityVerdict feas_binomial_system(const Mat& a, const std::vector<Rat>& c, const Int& p) {
    if (a.rows == 0 || a.rows != a.cols)
        throw std::invalid_argument("feas_binomial_system: matrix must be square and nonempty");
    if (c.size() != a.rows)
        throw std::invalid_argument("feas_binomial_system: right-hand side size mismatch");
    for (const Rat& ci : c)
        if (ci == 0) throw std::invalid_argument("feas_binomial_system: c entries must be nonzero");
    if (det(a) == 0) throw std::invalid_argument("feas_binomial_system: singular exponent matrix");
    PadicContext gate(p, 1);
    (void)gate;

    const std::size_t n = a.rows;
    SmithFactorization snf = smith_normal_form(a);
    long cap = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long ki = ord_p(snf.s.at(i, i), p).value();
        if (ki > cap) cap = ki;
    }
    long ell = 2 * cap + 1;
    PadicContext ctx(p, ell);

    std::vector<Int> ords;
    ords.reserve(n);
    for (const Rat& ci : c) ords.push_back(Int(ord_p(ci, p).value()));
    for (std::size_t i = 0; i < n; ++i) {
        Int dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += ords[j] * snf.v.at(j, i);
        if (!mpz_divisible_p(dot.get_mpz_t(), snf.s.at(i, i).get_mpz_t()))
            return {Feasibility::Infeasible, std::nullopt,
                    "valuation obstruction in Smith coordinate " + std::to_string(i + 1) +
                        ": s_ii does not divide (ord_p c)V"};
    }

    // Diagonalized unit system y^S = (c')^V, solved one coordinate at a time.
    std::vector<Int> cunits;
    cunits.reserve(n);
    for (const Rat& ci : c) cunits.push_back(ctx.reduce(unit_part(ci, p)));
    std::vector<Int> rhs = monomial_substitution(cunits, snf.v, ctx);
    std::vector<Int> y;
    y.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Int& dj = snf.s.at(j, j);
        if (!unit_is_dth_power(rhs[j], dj, p, ctx))
            return {Feasibility::Infeasible, std::nullopt,
                    "unit obstruction in Smith coordinate " + std::to_string(j + 1) +
                        ": (c^V)_j is not an s_jj-th power mod p^" + std::to_string(ell)};
        y.push_back(binomial_unit_root(rhs[j], dj, p, ell));
    }

    Certificate cert;
    cert.kind = CertKind::binomial_witness;
    cert.prime = p;
    cert.ell = ell;
    cert.root = monomial_substitution(y, snf.u, ctx);
    return {Feasibility::Feasible, cert,
            "diagonalized system solvable; unit root at precision 2 max ord_p(s_ii)+1"};
}

}  // namespace padfeas
