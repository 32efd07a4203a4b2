#include "padfeas/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace padfeas {

using nlohmann::json;

SparsePoly SparsePoly::constant(unsigned nvars, const Int& c) {
    if (c == 0) return zero(nvars);
    return SparsePoly{nvars, {Term{c, std::vector<long>(nvars, 0)}}};
}

SparsePoly SparsePoly::from_terms(unsigned nvars, std::vector<Term> ts, bool merge) {
    for (const Term& t : ts)
        if (t.exps.size() != nvars)
            throw std::invalid_argument("from_terms: exponent vector length mismatch");
    std::erase_if(ts, [](const Term& t) { return t.coeff == 0; });
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return a.exps < b.exps; });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (Term& t : ts) {
        if (!out.empty() && out.back().exps == t.exps) {
            if (!merge) throw std::invalid_argument("duplicate monomial");
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    return SparsePoly{nvars, std::move(out)};
}

const Term* SparsePoly::constant_term() const {
    for (const Term& t : terms)
        if (std::all_of(t.exps.begin(), t.exps.end(), [](long e) { return e == 0; })) return &t;
    return nullptr;
}

long size_measure(const SparsePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("size_measure: zero polynomial");
    Int t = 1;
    for (const Term& term : f.terms) {
        t *= 2 + abs(term.coeff);
        for (long e : term.exps) t *= 2 + std::abs(e);
    }
    if (t == 1) return 0;
    Int tm1 = t - 1;
    return static_cast<long>(mpz_sizeinbase(tm1.get_mpz_t(), 2));  // ceil(log2 t)
}

long size_measure_p(const SparsePoly& f, const Int& p) {
    if (p < 2) throw std::invalid_argument("size_measure_p: p must be >= 2");
    Int pm1 = p - 1;
    return size_measure(f) + static_cast<long>(mpz_sizeinbase(pm1.get_mpz_t(), 2));
}

Int normalized_volume(const SparsePoly& f) {
    if (f.nvars < 1 || f.term_count() != f.nvars + 1)
        throw std::invalid_argument("normalized_volume: need an n-variate (n+1)-term polynomial");
    Int d = det(exponent_matrix(f, 0));
    if (d == 0)
        throw std::invalid_argument("normalized_volume: support is not a full-dimensional simplex");
    return abs(d);
}

Int evaluate_mod(const SparsePoly& f, const std::vector<Int>& point, const PadicContext& ctx) {
    if (point.size() != f.nvars)
        throw std::invalid_argument("evaluate_mod: point size mismatch");
    Int acc = 0;
    for (const Term& t : f.terms) {
        Int mono = ctx.reduce(t.coeff);
        for (unsigned i = 0; i < f.nvars; ++i) {
            long e = t.exps[i];
            if (e == 0) continue;
            mono = ctx.reduce(mono * mod_pow(ctx.reduce(point[i]), Int(e), ctx.modulus));
        }
        acc = ctx.reduce(acc + mono);
    }
    return acc;
}

SparsePoly partial(const SparsePoly& f, unsigned i) {
    if (i >= f.nvars) throw std::invalid_argument("partial: variable index out of range");
    std::vector<Term> out;
    for (const Term& t : f.terms) {
        if (t.exps[i] == 0) continue;
        Term d{t.coeff * t.exps[i], t.exps};
        d.exps[i] -= 1;
        out.push_back(std::move(d));
    }
    return SparsePoly::from_terms(f.nvars, std::move(out), false);
}

std::vector<SparsePoly> partials(const SparsePoly& f) {
    std::vector<SparsePoly> out;
    out.reserve(f.nvars);
    for (unsigned i = 0; i < f.nvars; ++i) out.push_back(partial(f, i));
    return out;
}

SparsePoly reciprocal(const SparsePoly& f) {
    if (f.nvars != 1) throw std::invalid_argument("reciprocal: univariate input required");
    if (f.is_zero()) return f;
    long d = max_exponent(f);
    if (min_exponent(f) < 0)
        throw std::invalid_argument("reciprocal: nonnegative exponents required");
    std::vector<Term> out;
    for (const Term& t : f.terms) out.push_back(Term{t.coeff, {d - t.exps[0]}});
    return SparsePoly::from_terms(1, std::move(out), false);
}

SparsePoly poly_add(const SparsePoly& f, const SparsePoly& g) {
    if (f.nvars != g.nvars) throw std::invalid_argument("poly_add: nvars mismatch");
    std::vector<Term> ts = f.terms;
    ts.insert(ts.end(), g.terms.begin(), g.terms.end());
    return SparsePoly::from_terms(f.nvars, std::move(ts), true);
}

SparsePoly poly_neg(const SparsePoly& f) {
    SparsePoly g = f;
    for (Term& t : g.terms) t.coeff = -t.coeff;
    return g;
}

SparsePoly poly_scale(const Int& c, const SparsePoly& f) {
    if (c == 0) return SparsePoly::zero(f.nvars);
    SparsePoly g = f;
    for (Term& t : g.terms) t.coeff *= c;
    return g;
}

SparsePoly poly_mul(const SparsePoly& f, const SparsePoly& g) {
    if (f.nvars != g.nvars) throw std::invalid_argument("poly_mul: nvars mismatch");
    if (f.term_count() * g.term_count() > 1000000)
        throw std::overflow_error("poly_mul: term budget exceeded");
    std::vector<Term> ts;
    ts.reserve(f.term_count() * g.term_count());
    for (const Term& a : f.terms)
        for (const Term& b : g.terms) {
            Term t{a.coeff * b.coeff, a.exps};
            for (unsigned i = 0; i < f.nvars; ++i) t.exps[i] += b.exps[i];
            ts.push_back(std::move(t));
        }
    return SparsePoly::from_terms(f.nvars, std::move(ts), true);
}

SparsePoly mul_monomial(const SparsePoly& f, const Int& c, const std::vector<long>& e) {
    if (e.size() != f.nvars) throw std::invalid_argument("mul_monomial: exponent size mismatch");
    if (c == 0) return SparsePoly::zero(f.nvars);
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        Term nt{t.coeff * c, t.exps};
        for (unsigned i = 0; i < f.nvars; ++i) nt.exps[i] += e[i];
        ts.push_back(std::move(nt));
    }
    return SparsePoly::from_terms(f.nvars, std::move(ts), false);
}

SparsePoly flip_vars(const SparsePoly& f, const std::vector<unsigned>& vars) {
    SparsePoly g = f;
    for (Term& t : g.terms) {
        long parity = 0;
        for (unsigned v : vars) {
            if (v >= f.nvars) throw std::invalid_argument("flip_vars: variable out of range");
            parity += t.exps[v];
        }
        if (parity % 2 != 0) t.coeff = -t.coeff;
    }
    return g;
}

SparsePoly zero_vars(const SparsePoly& f, const std::vector<unsigned>& vars) {
    std::vector<bool> kill(f.nvars, false);
    for (unsigned v : vars) {
        if (v >= f.nvars) throw std::invalid_argument("zero_vars: variable out of range");
        kill[v] = true;
    }
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        bool drop = false;
        for (unsigned i = 0; i < f.nvars; ++i) {
            if (!kill[i] || t.exps[i] == 0) continue;
            if (t.exps[i] < 0)
                throw std::domain_error("zero_vars: negative exponent on a zeroed variable");
            drop = true;
        }
        if (!drop) ts.push_back(t);
    }
    return SparsePoly::from_terms(f.nvars, std::move(ts), false);
}

SparsePoly subset_terms(const SparsePoly& f, const std::vector<std::size_t>& idxs) {
    std::vector<Term> ts;
    for (std::size_t i : idxs) {
        if (i >= f.term_count()) throw std::invalid_argument("subset_terms: index out of range");
        ts.push_back(f.terms[i]);
    }
    return SparsePoly::from_terms(f.nvars, std::move(ts), false);
}

SparsePoly translate_min_exponents(const SparsePoly& f) {
    if (f.is_zero()) return f;
    std::vector<long> mins(f.nvars);
    for (unsigned i = 0; i < f.nvars; ++i) {
        long m = f.terms[0].exps[i];
        for (const Term& t : f.terms) m = std::min(m, t.exps[i]);
        mins[i] = -m;
    }
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        Term nt = t;
        for (unsigned i = 0; i < f.nvars; ++i) nt.exps[i] += mins[i];
        ts.push_back(std::move(nt));
    }
    return SparsePoly::from_terms(f.nvars, std::move(ts), false);
}

SparsePoly monomial_change(const SparsePoly& f, const Mat& u) {
    if (u.rows != u.cols || u.rows != f.nvars)
        throw std::invalid_argument("monomial_change: square nvars x nvars matrix required");
    Int d = det(u);
    if (d != 1 && d != -1) throw std::invalid_argument("monomial_change: matrix not unimodular");
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        Term nt{t.coeff, std::vector<long>(f.nvars, 0)};
        for (unsigned i = 0; i < f.nvars; ++i) {
            Int acc = 0;
            for (unsigned j = 0; j < f.nvars; ++j) acc += u.at(i, j) * t.exps[j];
            if (!acc.fits_slong_p()) throw std::overflow_error("monomial_change: exponent overflow");
            nt.exps[i] = acc.get_si();
        }
        ts.push_back(std::move(nt));
    }
    return SparsePoly::from_terms(f.nvars, std::move(ts), false);
}

Rescaled rescale(const SparsePoly& f, const Int& p, const std::vector<long>& t) {
    if (t.size() != f.nvars) throw std::invalid_argument("rescale: weight size mismatch");
    if (f.is_zero()) return Rescaled{f, 0};
    // Term c x^a picks up p^{<a,t>}; removing the minimum valuation keeps
    // integer coefficients with at least one p-unit among them.
    std::vector<long> shift(f.term_count());
    long m = 0;
    bool first = true;
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        const Term& term = f.terms[i];
        long dot = 0;
        for (unsigned j = 0; j < f.nvars; ++j) dot += term.exps[j] * t[j];
        long v = ord_p(term.coeff, p).value() + dot;
        shift[i] = dot;
        if (first || v < m) {
            m = v;
            first = false;
        }
    }
    std::vector<Term> ts;
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        const Term& term = f.terms[i];
        long e = shift[i] - m;  // ord of the p-power factor after normalization
        Term nt = term;
        if (e >= 0) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
            nt.coeff = term.coeff * pw;
        } else {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-e));
            Int q;
            mpz_divexact(q.get_mpz_t(), term.coeff.get_mpz_t(), pw.get_mpz_t());
            nt.coeff = q;
        }
        ts.push_back(std::move(nt));
    }
    return Rescaled{SparsePoly::from_terms(f.nvars, std::move(ts), false), m};
}

Rescaled rescale(const SparsePoly& f, const Int& p, long t) {
    if (f.nvars != 1) throw std::invalid_argument("rescale: univariate overload needs nvars = 1");
    return rescale(f, p, std::vector<long>{t});
}

SparsePoly stretch_exponents(const SparsePoly& f, long k) {
    if (f.nvars != 1) throw std::invalid_argument("stretch_exponents: univariate required");
    if (k < 1) throw std::invalid_argument("stretch_exponents: k must be >= 1");
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        if (std::abs(t.exps[0]) > (1L << 62) / k)
            throw std::overflow_error("stretch_exponents: exponent overflow");
        ts.push_back(Term{t.coeff, {t.exps[0] * k}});
    }
    return SparsePoly::from_terms(1, std::move(ts), false);
}

SparsePoly scale_root(const SparsePoly& f, const Int& n, const Int& d) {
    if (f.nvars != 1) throw std::invalid_argument("scale_root: univariate required");
    if (n == 0 || d == 0) throw std::invalid_argument("scale_root: zero scale");
    if (f.is_zero()) return f;
    if (min_exponent(f) < 0)
        throw std::invalid_argument("scale_root: nonnegative exponents required");
    long deg = max_exponent(f);
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        Int np, dp;
        mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(t.exps[0]));
        mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(deg - t.exps[0]));
        ts.push_back(Term{t.coeff * np * dp, t.exps});
    }
    return SparsePoly::from_terms(1, std::move(ts), false);
}

std::optional<SparsePoly> divide_univariate_exact(const SparsePoly& f, const SparsePoly& g,
                                                  long degree_cap) {
    if (f.nvars != 1 || g.nvars != 1)
        throw std::invalid_argument("divide_univariate_exact: univariate required");
    if (g.is_zero()) throw std::invalid_argument("divide_univariate_exact: zero divisor");
    if (f.is_zero()) return SparsePoly::zero(1);
    if (min_exponent(f) < 0 || min_exponent(g) < 0)
        throw std::invalid_argument("divide_univariate_exact: nonnegative exponents required");
    long df = max_exponent(f), dg = max_exponent(g);
    if (df > degree_cap) throw std::overflow_error("divide_univariate_exact: degree cap exceeded");
    if (df < dg) return std::nullopt;
    std::vector<Int> rem(static_cast<std::size_t>(df) + 1);
    for (const Term& t : f.terms) rem[static_cast<std::size_t>(t.exps[0])] = t.coeff;
    std::vector<Int> div(static_cast<std::size_t>(dg) + 1);
    for (const Term& t : g.terms) div[static_cast<std::size_t>(t.exps[0])] = t.coeff;
    std::vector<Int> quot(static_cast<std::size_t>(df - dg) + 1);
    const Int& lead = div[static_cast<std::size_t>(dg)];
    for (long k = df - dg; k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + dg)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quot[static_cast<std::size_t>(k)] = q;
        for (long j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k + j)] -= q * div[static_cast<std::size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<Term> ts;
    for (long k = 0; k <= df - dg; ++k)
        if (quot[static_cast<std::size_t>(k)] != 0)
            ts.push_back(Term{quot[static_cast<std::size_t>(k)], {k}});
    return SparsePoly::from_terms(1, std::move(ts), false);
}

long max_exponent(const SparsePoly& f) {
    if (f.nvars != 1 || f.is_zero()) throw std::invalid_argument("max_exponent: nonzero univariate required");
    return f.terms.back().exps[0];
}

long min_exponent(const SparsePoly& f) {
    if (f.nvars != 1 || f.is_zero()) throw std::invalid_argument("min_exponent: nonzero univariate required");
    return f.terms.front().exps[0];
}

Int coeff_of(const SparsePoly& f, long e) {
    if (f.nvars != 1) throw std::invalid_argument("coeff_of: univariate required");
    for (const Term& t : f.terms)
        if (t.exps[0] == e) return t.coeff;
    return 0;
}

Mat exponent_matrix(const SparsePoly& f, std::size_t base_term) {
    if (base_term >= f.term_count())
        throw std::invalid_argument("exponent_matrix: base term out of range");
    Mat a(f.nvars, f.term_count() - 1);
    std::size_t col = 0;
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        if (i == base_term) continue;
        for (unsigned r = 0; r < f.nvars; ++r)
            a.at(r, col) = f.terms[i].exps[r] - f.terms[base_term].exps[r];
        ++col;
    }
    return a;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("poly parse error at position " + std::to_string(i) + ": " +
                                    what);
    }
};

Int parse_integer(Cursor& c, bool allow_sign) {
    c.skip_ws();
    std::size_t start = c.i;
    if (allow_sign && c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    std::size_t digits_start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits_start) {
        c.i = start;
        c.fail("expected an integer");
    }
    return Int(c.s.substr(start, c.i - start));
}

}  // namespace

SparsePoly parse_poly_text(const std::string& s) {
    Cursor c{s};
    struct RawTerm {
        Int coeff;
        std::map<unsigned, long> exps;
    };
    std::vector<RawTerm> raw;
    unsigned max_var = 0;
    bool first = true;
    while (true) {
        if (c.done()) {
            if (first) c.fail("empty polynomial");
            break;
        }
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = (p == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        RawTerm term{Int(sign), {}};
        bool have_factor = false;
        while (true) {
            char f0 = c.peek();
            if (f0 == 'x') {
                ++c.i;
                Int idx = parse_integer(c, false);
                if (idx < 1 || !idx.fits_ulong_p()) c.fail("bad variable index");
                unsigned var = static_cast<unsigned>(idx.get_ui());
                long e = 1;
                if (c.peek() == '^') {
                    ++c.i;
                    Int ev = parse_integer(c, true);
                    if (!ev.fits_slong_p()) c.fail("exponent out of range");
                    e = ev.get_si();
                }
                term.exps[var - 1] += e;
                max_var = std::max(max_var, var);
                have_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(f0))) {
                term.coeff *= parse_integer(c, false);
                have_factor = true;
            } else {
                c.fail("expected a coefficient or variable");
            }
            if (c.peek() == '*') {
                ++c.i;
                continue;
            }
            break;
        }
        if (!have_factor) c.fail("empty term");
        raw.push_back(std::move(term));
        first = false;
        char nxt = c.peek();
        if (nxt == '\0') break;
        if (nxt != '+' && nxt != '-') c.fail("unexpected character");
    }
    std::vector<Term> ts;
    for (RawTerm& r : raw) {
        Term t{std::move(r.coeff), std::vector<long>(max_var, 0)};
        for (auto& [var, e] : r.exps) t.exps[var] = e;
        ts.push_back(std::move(t));
    }
    try {
        return SparsePoly::from_terms(max_var, std::move(ts), false);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("poly parse error: ") + e.what());
    }
}

std::string sparse_poly_to_json(const SparsePoly& f) {
    json terms = json::array();
    for (const Term& t : f.terms) terms.push_back(json::array({t.coeff.get_str(), t.exps}));
    return json{{"nvars", f.nvars}, {"terms", terms}}.dump();
}

SparsePoly sparse_poly_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms") ||
        !j["nvars"].is_number_unsigned() || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON: need {\"nvars\": n, \"terms\": [...]}");
    unsigned nvars = j["nvars"].get<unsigned>();
    std::vector<Term> ts;
    for (const json& item : j["terms"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_array())
            throw std::invalid_argument("polynomial JSON: term must be [\"coeff\", [exps]]");
        Term t;
        try {
            t.coeff = Int(item[0].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("polynomial JSON: bad coefficient string");
        }
        for (const json& e : item[1]) {
            if (!e.is_number_integer())
                throw std::invalid_argument("polynomial JSON: exponents must be integers");
            t.exps.push_back(e.get<long>());
        }
        if (t.exps.size() != nvars)
            throw std::invalid_argument("polynomial JSON: exponent vector length mismatch");
        ts.push_back(std::move(t));
    }
    return SparsePoly::from_terms(nvars, std::move(ts), false);
}

std::string to_string(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : f.terms) {
        Int mag = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) out << "-";
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(t.exps.begin(), t.exps.end(), [](long e) { return e != 0; });
        bool printed = false;
        if (mag != 1 || !has_var) {
            out << mag.get_str();
            printed = true;
        }
        for (unsigned i = 0; i < f.nvars; ++i) {
            if (t.exps[i] == 0) continue;
            if (printed) out << "*";
            out << "x" << (i + 1);
            if (t.exps[i] != 1) out << "^" << t.exps[i];
            printed = true;
        }
    }
    return out.str();
}

}  // namespace padfeas
