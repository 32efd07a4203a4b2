#include "padfeas/certificate.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "padfeas/gcdfree.hpp"
#include "padfeas/resultant.hpp"

namespace padfeas {

namespace {

std::pair<std::string, std::string> split_op(const std::string& line) {
    auto sp = line.find(' ');
    if (sp == std::string::npos) return {line, ""};
    return {line.substr(0, sp), line.substr(sp + 1)};
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("transcript: bad integer '" + s + "'");
    return v;
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("transcript: empty integer");
    return Int(s);  // throws std::invalid_argument on garbage
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    for (const std::string& tok : split_commas(s)) out.push_back(parse_long(tok));
    return out;
}

// 1-based comma-separated variable list -> 0-based indices.
std::vector<unsigned> parse_var_list(const std::string& s, unsigned nvars) {
    std::vector<unsigned> out;
    for (long v : parse_long_list(s)) {
        if (v < 1 || static_cast<unsigned long>(v) > nvars)
            throw std::invalid_argument("transcript: variable index out of range");
        out.push_back(static_cast<unsigned>(v - 1));
    }
    return out;
}

bool any_forced(const std::vector<bool>& mask) {
    for (bool b : mask) if (b) return true;
    return false;
}

// Remove variables that occur in no term. Zeroed variables no longer occur
// (zero_vars removed their terms), so this clears the forced-zero mask.
void drop_free_vars(TranscriptReplay& r) {
    const SparsePoly& f = r.poly;
    std::vector<bool> occurs(f.nvars, false);
    for (const Term& t : f.terms)
        for (unsigned i = 0; i < f.nvars; ++i)
            if (t.exps[i] != 0) occurs[i] = true;
    std::vector<unsigned> keep;
    for (unsigned i = 0; i < f.nvars; ++i)
        if (occurs[i]) keep.push_back(i);
    if (keep.size() == f.nvars) return;
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        std::vector<long> e;
        e.reserve(keep.size());
        for (unsigned i : keep) e.push_back(t.exps[i]);
        ts.push_back(Term{t.coeff, std::move(e)});
    }
    std::vector<bool> fz;
    for (unsigned i : keep) fz.push_back(r.forced_zero[i]);
    r.poly = SparsePoly::from_terms(static_cast<unsigned>(keep.size()), std::move(ts), false);
    r.forced_zero = std::move(fz);
}

// Trinomial with a vanishing discriminant collapses to a binomial: the
// degenerate root zeta of the gcd-reduced trinomial satisfies F(zeta) = 0,
// so any x with x^g = zeta (g = gcd of the exponents) is a root of f.
void apply_degenerate_binomial(TranscriptReplay& r) {
    const SparsePoly& f = r.poly;
    if (f.nvars != 1 || f.term_count() != 3)
        throw std::invalid_argument("degenerate-binomial: univariate trinomial required");
    long e0 = f.terms[0].exps[0], e1 = f.terms[1].exps[0], e2 = f.terms[2].exps[0];
    if (e0 != 0 || e1 <= 0 || e2 <= e1)
        throw std::invalid_argument("degenerate-binomial: exponents 0 < a2 < a3 required");
    long g = std::gcd(e1, e2);
    // Throws std::domain_error unless the reduced discriminant vanishes.
    Rat zeta = degenerate_root_trinomial(f.terms[0].coeff, f.terms[1].coeff, f.terms[2].coeff,
                                         e1 / g, e2 / g);
    std::vector<Term> ts;
    ts.push_back(Term{Int(-zeta.get_num()), {0}});
    ts.push_back(Term{Int(zeta.get_den()), {g}});
    r.poly = SparsePoly::from_terms(1, std::move(ts), false);
}

Mat parse_mono_matrix(const std::string& rest, unsigned nvars) {
    auto sp = rest.find(' ');
    if (sp == std::string::npos) throw std::invalid_argument("mono: missing entries");
    long n = parse_long(rest.substr(0, sp));
    if (n < 1 || static_cast<unsigned long>(n) != nvars)
        throw std::invalid_argument("mono: dimension mismatch");
    std::vector<std::string> toks = split_commas(rest.substr(sp + 1));
    if (toks.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("mono: wrong entry count");
    Mat u(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < u.rows; ++i)
        for (std::size_t j = 0; j < u.cols; ++j)
            u.at(i, j) = parse_int(toks[i * u.cols + j]);
    return u;
}

// -c_a / c_b for a two-term univariate c_a x^a + c_b x^b (a < b), i.e. the
// right-hand side of the torus-equivalent equation x^{b-a} = c.
struct BinomialView {
    long d;  // b - a >= 1
    long min_exp;
    Rat c;
};

BinomialView binomial_view(const SparsePoly& g) {
    if (g.nvars != 1 || g.term_count() != 2)
        throw std::invalid_argument("not a univariate binomial");
    long a = g.terms[0].exps[0], b = g.terms[1].exps[0];
    Rat c(-g.terms[0].coeff, g.terms[1].coeff);
    c.canonicalize();
    return BinomialView{b - a, a, c};
}

bool in_range(const Int& x, const Int& modulus) { return x >= 0 && x < modulus; }

// Diagonal quadratic shape: optional constant term plus c_i x_i^2 terms, at
// most one per variable. Returns (c0, square coefficients); throws otherwise.
std::pair<Int, std::vector<Int>> diagonal_quadratic_parts(const SparsePoly& f) {
    Int c0 = 0;
    std::vector<Int> squares;
    for (const Term& t : f.terms) {
        int nz = 0;
        long e = 0;
        for (long ei : t.exps) {
            if (ei != 0) {
                ++nz;
                e = ei;
            }
        }
        if (nz == 0) {
            c0 = t.coeff;
        } else if (nz == 1 && e == 2) {
            squares.push_back(t.coeff);
        } else {
            throw std::domain_error("not a diagonal quadratic");
        }
    }
    return {c0, squares};
}

bool is_square_qp(const Rat& r, const Int& p) {
    if (r == 0) return true;
    Valuation mu = ord_p(r, p);
    if (mu.value() % 2 != 0) return false;
    Rat u = unit_part(r, p);
    if (p == 2) return mod_reduce(u, Int(8)) == 1;
    return legendre(mod_reduce(u, p), p) == 1;
}

}  // namespace

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::hensel_root: return "hensel_root";
        case CertKind::binomial_witness: return "binomial_witness";
        case CertKind::valuation_obstruction: return "valuation_obstruction";
        case CertKind::quadratic_symbolic: return "quadratic_symbolic";
    }
    throw std::logic_error("unreachable certificate kind");
}

CertKind cert_kind_from_name(const std::string& name) {
    if (name == "hensel_root") return CertKind::hensel_root;
    if (name == "binomial_witness") return CertKind::binomial_witness;
    if (name == "valuation_obstruction") return CertKind::valuation_obstruction;
    if (name == "quadratic_symbolic") return CertKind::quadratic_symbolic;
    throw std::invalid_argument("unknown certificate kind: " + name);
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["kind"] = cert_kind_name(cert.kind);
    j["prime"] = cert.prime.get_str();
    j["ell"] = cert.ell;
    auto arr = nlohmann::json::array();
    for (const Int& r : cert.root) arr.push_back(r.get_str());
    j["root"] = std::move(arr);
    if (cert.kind == CertKind::hensel_root) {
        j["deriv_index"] = cert.deriv_index;
        j["deriv_valuation"] = cert.deriv_valuation;
    }
    j["transcript"] = cert.transcript;
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert;
    cert.kind = cert_kind_from_name(j.at("kind").get<std::string>());
    const auto& jp = j.at("prime");
    cert.prime = jp.is_string() ? parse_int(jp.get<std::string>()) : Int(jp.get<long>());
    cert.ell = j.at("ell").get<long>();
    for (const auto& jr : j.at("root"))
        cert.root.push_back(jr.is_string() ? parse_int(jr.get<std::string>())
                                           : Int(jr.get<long>()));
    cert.deriv_index = j.value("deriv_index", 0L);
    cert.deriv_valuation = j.value("deriv_valuation", 0L);
    if (j.contains("transcript"))
        cert.transcript = j.at("transcript").get<std::vector<std::string>>();
    return cert;
}

TranscriptReplay replay_transcript(const SparsePoly& f, const Int& p,
                                   const std::vector<std::string>& transcript) {
    TranscriptReplay r{f, false, std::vector<bool>(f.nvars, false)};
    for (const std::string& line : transcript) {
        auto [op, rest] = split_op(line);
        // Between a zero-set and the drop-free-vars that removes the zeroed
        // variables, only zero-preserving ops keep the root map sound.
        bool zeroed = any_forced(r.forced_zero);
        if (zeroed && op != "zero-set" && op != "flip" && op != "drop-free-vars")
            throw std::invalid_argument("transcript: '" + op + "' after zero-set");
        if (op == "reciprocal") {
            r.poly = reciprocal(r.poly);
        } else if (op == "rescale") {
            r.poly = rescale(r.poly, p, parse_long_list(rest)).g;
        } else if (op == "translate") {
            // Dividing out negative minimum exponents multiplies roots back
            // in with negative powers, which needs unit coordinates.
            for (unsigned i = 0; i < r.poly.nvars; ++i)
                for (const Term& t : r.poly.terms)
                    if (t.exps[i] < 0) r.require_units = true;
            r.poly = translate_min_exponents(r.poly);
        } else if (op == "zero-set") {
            std::vector<unsigned> vars = parse_var_list(rest, r.poly.nvars);
            r.poly = zero_vars(r.poly, vars);
            for (unsigned v : vars) r.forced_zero[v] = true;
        } else if (op == "flip") {
            r.poly = flip_vars(r.poly, parse_var_list(rest, r.poly.nvars));
        } else if (op == "mono") {
            r.poly = monomial_change(r.poly, parse_mono_matrix(rest, r.poly.nvars));
            r.require_units = true;  // inverting the substitution needs units
        } else if (op == "drop-free-vars") {
            drop_free_vars(r);
        } else if (op == "scale-root") {
            auto slash = rest.find('/');
            if (slash == std::string::npos)
                throw std::invalid_argument("scale-root: expected n/d");
            Int n = parse_int(rest.substr(0, slash));
            Int d = parse_int(rest.substr(slash + 1));
            r.poly = scale_root(r.poly, n, d);
        } else if (op == "divide-sq1") {
            SparsePoly sq = SparsePoly::from_terms(
                1, {Term{Int(1), {0}}, Term{Int(-2), {1}}, Term{Int(1), {2}}}, false);
            auto q = divide_univariate_exact(r.poly, sq);
            if (!q) throw std::domain_error("divide-sq1: division not exact");
            r.poly = std::move(*q);
        } else if (op == "degenerate-binomial") {
            apply_degenerate_binomial(r);
        } else {
            throw std::invalid_argument("transcript: unknown op '" + op + "'");
        }
    }
    return r;
}

std::vector<Int> hensel_lift(const SparsePoly& f, const std::vector<Int>& root0,
                             long deriv_index, long deriv_valuation, const Int& p,
                             long target_ell) {
    const long k = deriv_valuation;
    if (k < 0) throw std::invalid_argument("hensel_lift: negative derivative valuation");
    if (target_ell < 2 * k + 1)
        throw std::invalid_argument("hensel_lift: target precision below 2k+1");
    if (deriv_index < 0 || static_cast<unsigned long>(deriv_index) >= f.nvars)
        throw std::invalid_argument("hensel_lift: derivative index out of range");
    if (root0.size() != f.nvars)
        throw std::invalid_argument("hensel_lift: root size mismatch");

    const long work = target_ell + k;  // slack so p^{-k} divisions stay exact
    PadicContext ctxw(p, work);
    PadicContext ctxt(p, target_ell);
    std::vector<Int> z;
    z.reserve(root0.size());
    for (const Int& r : root0) z.push_back(ctxw.reduce(r));

    SparsePoly dpoly = partial(f, static_cast<unsigned>(deriv_index));
    try {
        PadicContext ctx0(p, 2 * k + 1);
        if (evaluate_mod(f, z, ctx0) != 0)
            throw std::invalid_argument("hensel_lift: f(root0) != 0 mod p^(2k+1)");
        Int dv = evaluate_mod(dpoly, z, ctxw);
        if (dv == 0 || ord_p(dv, p) != Valuation::of(k))
            throw std::invalid_argument("hensel_lift: derivative valuation is not k");
    } catch (const std::domain_error&) {
        throw std::invalid_argument("hensel_lift: root has a non-unit Laurent coordinate");
    }

    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
        if (evaluate_mod(f, z, ctxt) == 0) {
            converged = true;
            break;
        }
        Int fw = evaluate_mod(f, z, ctxw);
        Int dw = evaluate_mod(dpoly, z, ctxw);
        if (!mpz_divisible_p(fw.get_mpz_t(), pk.get_mpz_t()) ||
            !mpz_divisible_p(dw.get_mpz_t(), pk.get_mpz_t()))
            throw std::runtime_error("hensel_lift: lost divisibility by p^k");
        Int t = fw / pk;
        Int u = ctxt.reduce(dw / pk);
        Int delta = ctxt.reduce(t * ctxt.inverse(u));
        z[static_cast<std::size_t>(deriv_index)] =
            ctxw.reduce(z[static_cast<std::size_t>(deriv_index)] - delta);
    }
    if (!converged && evaluate_mod(f, z, ctxt) != 0)
        throw std::runtime_error("hensel_lift: no convergence within iteration bound");
    for (Int& r : z) r = ctxt.reduce(r);
    return z;
}

namespace {

bool check_hensel_root(const SparsePoly& g, const Int& p, const Certificate& cert,
                       const TranscriptReplay& replay) {
    // Identically zero target: every point is a root, nothing left to check.
    if (g.is_zero()) return true;
    const long k = cert.deriv_valuation;
    if (k < 0 || 2 * k + 1 > cert.ell) return false;
    if (cert.deriv_index < 0 || static_cast<unsigned long>(cert.deriv_index) >= g.nvars)
        return false;
    if (cert.root.size() != g.nvars) return false;
    PadicContext ctx(p, cert.ell);
    for (std::size_t i = 0; i < cert.root.size(); ++i) {
        if (!in_range(cert.root[i], ctx.modulus)) return false;
        if (replay.forced_zero[i] && cert.root[i] != 0) return false;
        if (replay.require_units && mod_reduce(cert.root[i], p) == 0) return false;
    }
    PadicContext ctx_inv(p, 2 * k + 1);
    if (evaluate_mod(g, cert.root, ctx_inv) != 0) return false;
    Int dv = evaluate_mod(partial(g, static_cast<unsigned>(cert.deriv_index)), cert.root, ctx);
    return dv != 0 && ord_p(dv, p) == Valuation::of(k);
}

bool check_binomial_witness(const SparsePoly& g, const Int& p, const Certificate& cert,
                            const TranscriptReplay& replay) {
    BinomialView bv = binomial_view(g);  // throws unless two-term univariate
    if (bv.d < 1) return false;
    if (cert.root.size() != 1) return false;
    if (any_forced(replay.forced_zero)) return false;
    Valuation ordc = ord_p(bv.c, p);
    if (ordc.value() % bv.d != 0) return false;
    // The implied root has valuation ord(c)/d; unit-requiring transcript ops
    // only stay sound when that is zero.
    if (replay.require_units && ordc.value() != 0) return false;
    long elld = ord_p(Int(bv.d), p).value();
    if (cert.ell < 2 * elld + 1) return false;
    PadicContext ctx(p, cert.ell);
    const Int& w = cert.root[0];
    if (!in_range(w, ctx.modulus) || mod_reduce(w, p) == 0) return false;
    return mod_pow(w, Int(bv.d), ctx.modulus) == ctx.reduce(unit_part(bv.c, p));
}

bool check_valuation_obstruction(const SparsePoly& g, const Int& p, const Certificate& cert) {
    // Only root-set-preserving (bidirectional) ops may precede an
    // infeasibility claim.
    for (const std::string& line : cert.transcript) {
        auto [op, rest] = split_op(line);
        (void)rest;
        if (op != "rescale" && op != "flip") return false;
    }
    if (g.is_zero()) return false;
    if (g.term_count() == 1) {
        for (long e : g.terms[0].exps)
            if (e != 0) return false;
        return true;  // nonzero constant
    }
    if (g.nvars != 1 || g.term_count() != 2) return false;
    BinomialView bv = binomial_view(g);
    if (bv.d < 1) return false;
    if (bv.min_exp > 0) return false;  // x = 0 would be a root
    return ord_p(bv.c, p).value() % bv.d != 0;
}

bool check_quadratic_symbolic(const SparsePoly& f, const Int& p, const Certificate& cert) {
    int claim = 0;
    for (const std::string& line : cert.transcript) {
        if (line == "quadratic feasible") claim = claim == 0 ? 1 : 3;
        if (line == "quadratic infeasible") claim = claim == 0 ? 2 : 3;
    }
    if (claim != 1 && claim != 2) return false;
    return quadratic_symbolic_condition(f, p) == (claim == 1);
}

}  // namespace

bool quadratic_symbolic_condition(const SparsePoly& f, const Int& p) {
    auto [c0, cs] = diagonal_quadratic_parts(f);  // throws on other shapes
    if (cs.empty()) throw std::domain_error("not a diagonal quadratic");
    if (c0 == 0) return true;  // the origin is a root
    const std::size_t n = cs.size();
    if (n >= 4) return true;
    if (n == 1) return is_square_qp(Rat(-c0) / cs[0], p);
    Rat d = 1;
    for (const Int& ci : cs) d *= ci;
    int eps = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) eps *= hilbert(Rat(cs[i]), Rat(cs[j]), p);
    if (n == 2) return hilbert(Rat(-c0), -d, p) == eps;
    // n == 3: solvable unless -c0 sits in the single excluded square class.
    if (!is_square_qp(Rat(c0) * d, p)) return true;
    return hilbert(Rat(-1), -d, p) == eps;
}

bool verify_certificate(const SparsePoly& f, const Int& p, const Certificate& cert) {
    try {
        if (cert.prime != p || cert.ell < 1) return false;
        PadicContext gate(p, 1);  // rejects non-prime moduli
        (void)gate;
        if (cert.kind == CertKind::quadratic_symbolic)
            return check_quadratic_symbolic(f, p, cert);
        TranscriptReplay replay = replay_transcript(f, p, cert.transcript);
        switch (cert.kind) {
            case CertKind::hensel_root:
                return check_hensel_root(replay.poly, p, cert, replay);
            case CertKind::binomial_witness:
                return check_binomial_witness(replay.poly, p, cert, replay);
            case CertKind::valuation_obstruction:
                return check_valuation_obstruction(replay.poly, p, cert);
            default:
                return false;
        }
    } catch (...) {
        return false;
    }
}

bool verify_system_certificate(const Mat& a, const std::vector<Rat>& c, const Int& p,
                               const Certificate& cert) {
    try {
        if (cert.prime != p || cert.ell < 1) return false;
        if (cert.kind != CertKind::binomial_witness) return false;
        if (a.cols != c.size() || cert.root.size() != a.rows) return false;
        for (const Rat& cj : c)
            if (cj == 0) return false;

        SmithFactorization snf = smith_normal_form(a);
        std::size_t rank = std::min(a.rows, a.cols);
        long max_ord = 0;
        for (std::size_t j = 0; j < rank; ++j) {
            const Int& s = snf.s.at(j, j);
            if (s != 0) max_ord = std::max(max_ord, ord_p(s, p).value());
        }
        if (cert.ell < 2 * max_ord + 1) return false;

        // Valuation solvability: ord(c^V)_j must vanish into s_jj for the
        // nonzero invariant factors and the trailing equations must be
        // exactly 1 (their unknowns got exponent 0).
        std::vector<Valuation> ordc;
        ordc.reserve(c.size());
        for (const Rat& cj : c) ordc.push_back(ord_p(cj, p));
        for (std::size_t j = 0; j < a.cols; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                acc += Int(ordc[i].value()) * snf.v.at(i, j);
            const Int s = j < rank ? snf.s.at(j, j) : Int(0);
            if (s != 0) {
                if (!mpz_divisible_p(acc.get_mpz_t(), s.get_mpz_t())) return false;
            } else {
                // (c^V)_j = 1 exactly: zero total valuation, positive sign,
                // and a trivial unit power product.
                if (acc != 0) return false;
                int sign = 1;
                std::vector<Int> mags;
                std::vector<Int> exps;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    const Int& e = snf.v.at(i, j);
                    if (c[i] < 0 && mpz_odd_p(e.get_mpz_t())) sign = -sign;
                    mags.push_back(abs(c[i].get_num()));
                    exps.push_back(e);
                    mags.push_back(abs(c[i].get_den()));
                    exps.push_back(Int(-e));
                }
                if (sign != 1) return false;
                if (!power_product_is_one(mags, exps)) return false;
            }
        }

        PadicContext ctx(p, cert.ell);
        for (const Int& u : cert.root)
            if (!in_range(u, ctx.modulus) || mod_reduce(u, p) == 0) return false;
        std::vector<Int> pow = monomial_substitution(cert.root, a, ctx);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (pow[j] != ctx.reduce(unit_part(c[j], p))) return false;
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace padfeas
