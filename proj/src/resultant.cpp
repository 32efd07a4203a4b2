#include "padfeas/resultant.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace padfeas {

namespace {

// Dense ascending coefficient vector of a univariate polynomial, padded to
// degree d (so the result has d+1 entries).
std::vector<Int> dense_coeffs(const SparsePoly& f, long d, const char* who) {
    if (f.nvars > 1) throw std::invalid_argument(std::string(who) + ": polynomial is not univariate");
    std::vector<Int> c(static_cast<std::size_t>(d) + 1, Int(0));
    for (const Term& t : f.terms) {
        long a = t.exps.empty() ? 0 : t.exps[0];
        if (a < 0) throw std::invalid_argument(std::string(who) + ": negative exponent");
        if (a > d) throw std::invalid_argument(std::string(who) + ": degree exceeds the declared bound");
        c[static_cast<std::size_t>(a)] = t.coeff;
    }
    return c;
}

Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rat rat_int_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), b.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), b.get_den().get_mpz_t(), k);
    if (e < 0) {
        if (n == 0) throw std::domain_error("rat_int_pow: zero to a negative power");
        std::swap(n, d);
    }
    Rat r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

Mat sylvester_matrix(const SparsePoly& f, const SparsePoly& g, long d, long dprime,
                     long row_cap) {
    if (d < 0 || dprime < 0) throw std::invalid_argument("sylvester_matrix: negative degree bound");
    long n = d + dprime;
    if (n > row_cap) throw std::overflow_error("sylvester_matrix: matrix too large");
    std::vector<Int> a = dense_coeffs(f, d, "sylvester_matrix");
    std::vector<Int> b = dense_coeffs(g, dprime, "sylvester_matrix");
    Mat s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long r = 0; r < dprime; ++r)
        for (long j = 0; j <= d; ++j)
            s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + j)) = a[static_cast<std::size_t>(j)];
    for (long r = 0; r < d; ++r)
        for (long j = 0; j <= dprime; ++j)
            s.at(static_cast<std::size_t>(dprime + r), static_cast<std::size_t>(r + j)) =
                b[static_cast<std::size_t>(j)];
    return s;
}

Int resultant(const SparsePoly& f, const SparsePoly& g, long d, long dprime, long row_cap) {
    return det(sylvester_matrix(f, g, d, dprime, row_cap));
}

Int a_discriminant(const SparsePoly& f, long row_cap) {
    if (f.nvars > 1) throw std::invalid_argument("a_discriminant: polynomial is not univariate");
    if (f.term_count() < 2) throw std::invalid_argument("a_discriminant: need at least two terms");
    std::vector<long> a;
    for (const Term& t : f.terms) {
        long e = t.exps.empty() ? 0 : t.exps[0];
        if (e < 0) throw std::invalid_argument("a_discriminant: negative exponent");
        a.push_back(e);
    }
    // Terms are sorted by ascending exponent; translate to a_1 = 0 and divide
    // the support by its gcd.
    long a1 = a.front();
    long g = 0;
    for (long e : a) g = std::gcd(g, e - a1);
    std::size_t m = f.terms.size();
    std::vector<Term> fbar_terms, h_terms;
    long abar_2 = (a[1] - a1) / g;
    for (std::size_t i = 0; i < m; ++i) {
        long abar = (a[i] - a1) / g;
        fbar_terms.push_back(Term{f.terms[i].coeff, {abar}});
        if (i > 0)  // fbar' / x^{abar_2 - 1}
            h_terms.push_back(Term{Int(f.terms[i].coeff * abar), {abar - abar_2}});
    }
    long dd = (a[m - 1] - a1) / g;
    long dp = dd - abar_2;
    SparsePoly fbar = SparsePoly::from_terms(1, fbar_terms, false);
    SparsePoly h = SparsePoly::from_terms(1, h_terms, false);
    Int r = resultant(fbar, h, dd, dp, row_cap);
    long abar_m1 = (a[m - 2] - a1) / g;
    Int divisor = int_pow(f.terms[m - 1].coeff, static_cast<unsigned long>(dd - abar_m1));
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), divisor.get_mpz_t());
    if (rem != 0) throw std::logic_error("a_discriminant: leading-coefficient division is not exact");
    // Sign normalized so the dense quadratic yields the classic c2^2 - 4c1c3
    // and the trinomial closed form agrees for every coprime exponent pair.
    if (dd % 2 == 0) q = -q;
    return q;
}

Int trinomial_discriminant(const Int& c1, const Int& c2, const Int& c3, long a2, long a3) {
    if (!(0 < a2 && a2 < a3)) throw std::invalid_argument("trinomial_discriminant: need 0 < a2 < a3");
    if (std::gcd(a2, a3) != 1) throw std::invalid_argument("trinomial_discriminant: exponents must be coprime");
    if (c1 == 0 || c2 == 0 || c3 == 0)
        throw std::invalid_argument("trinomial_discriminant: coefficients must be nonzero");
    if (a3 > 100000) throw std::overflow_error("trinomial_discriminant: exponent too large");
    unsigned long ua2 = static_cast<unsigned long>(a2);
    unsigned long ua3 = static_cast<unsigned long>(a3);
    unsigned long ur = ua3 - ua2;
    Int lhs = int_pow(Int(a3 - a2), ur) * int_pow(Int(a2), ua2) * int_pow(c2, ua3);
    Int rhs = int_pow(Int(-a3), ua3) * int_pow(c1, ur) * int_pow(c3, ua2);
    return Int(lhs - rhs);
}

Rat degenerate_root_trinomial(const Int& c1, const Int& c2, const Int& c3, long a2, long a3) {
    if (trinomial_discriminant(c1, c2, c3, a2, a3) != 0)
        throw std::domain_error("degenerate_root_trinomial: no degenerate root (discriminant is nonzero)");
    Rat za2 = Rat(Int(-c1 * a3), Int((a3 - a2) * c2));  // zeta^{a2}
    Rat za3 = Rat(Int(c1 * a2), Int((a3 - a2) * c3));   // zeta^{a3}
    za2.canonicalize();
    za3.canonicalize();
    ExtGcd e = ext_gcd(Int(a2), Int(a3));
    // e.a * a2 + e.b * a3 = 1, so zeta = (zeta^{a2})^{e.a} * (zeta^{a3})^{e.b}.
    long A = static_cast<long>(e.a.get_si());
    long B = static_cast<long>(e.b.get_si());
    Rat zeta = rat_int_pow(za2, A) * rat_int_pow(za3, B);
    zeta.canonicalize();
    return zeta;
}

}  // namespace padfeas
