#include "padfeas/hardness.hpp"

#include "padfeas/primes.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace padfeas {
namespace {

// Divisor enumeration stays tractable only for orders of primorial size;
// the reduction itself never needs it (plaisted builds factored forms
// directly), so the guard only limits the slow introspection helpers.
constexpr long kDivisorCap = 4096;

// Distinct prime factors, ascending. Orders beyond trial-division range
// must themselves be prime.
std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    for (Int q = 2; q <= 1000000 && q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) {
        if (!is_prime(n)) throw std::runtime_error("hardness: order has an intractable factor");
        out.push_back(n);
    }
    return out;
}

std::vector<Int> all_divisors(const Int& d) {
    Int n = d;
    std::vector<std::pair<Int, int>> fac;
    for (Int q = 2; q <= 1000000 && q * q <= n; ++q)
        if (n % q == 0) {
            int k = 0;
            while (n % q == 0) {
                n /= q;
                ++k;
            }
            fac.emplace_back(q, k);
        }
    if (n > 1) {
        if (!is_prime(n)) throw std::runtime_error("hardness: order has an intractable factor");
        fac.emplace_back(n, 1);
    }
    long count = 1;
    for (const auto& [q, k] : fac) {
        count *= k + 1;
        if (count > kDivisorCap)
            throw std::runtime_error("hardness: too many divisors to enumerate");
    }
    std::vector<Int> divs{Int(1)};
    for (const auto& [q, k] : fac) {
        const std::size_t base = divs.size();
        Int pw = 1;
        for (int i = 1; i <= k; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int moebius(Int n) {
    int sign = 1;
    for (Int q = 2; q <= 1000000 && q * q <= n; ++q)
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            sign = -sign;
        }
    if (n > 1) {
        if (!is_prime(n)) throw std::runtime_error("hardness: order has an intractable factor");
        sign = -sign;
    }
    return sign;
}

void check_prime_sequence(const std::vector<Int>& P) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (!is_prime(P[i]))
            throw std::invalid_argument("plaisted: prime sequence entry is not prime");
        if (i > 0 && P[i] <= P[i - 1])
            throw std::invalid_argument("plaisted: prime sequence must be strictly increasing");
    }
}

std::invalid_argument dimacs_error(long line, const std::string& msg) {
    return std::invalid_argument("dimacs line " + std::to_string(line) + ": " + msg);
}

}  // namespace

BinomialProduct plaisted(const std::vector<int>& literals, const std::vector<Int>& P) {
    check_prime_sequence(P);
    if (literals.size() > 3)
        throw std::invalid_argument("plaisted: a clause has at most three literals");
    Int d = 1;
    for (const Int& q : P) d *= q;

    std::vector<int> vars;
    for (int lit : literals) {
        int v = lit > 0 ? lit : -lit;
        if (v < 1 || static_cast<std::size_t>(v) > P.size())
            throw std::invalid_argument("plaisted: literal variable out of range");
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    const unsigned k = static_cast<unsigned>(vars.size());

    // The index set of the image is cut out by the divisibility of the
    // index by the relevant primes alone, so the Moebius exponents vanish
    // except at d / (subproduct of relevant primes): for r a subset of the
    // relevant primes, e_{d/r} = sum over subsets r' of r of
    // mu(r/r') * [the disjunction holds under y_i := (p_i | r')].
    BinomialProduct out{d, {}};
    for (unsigned r = 0; r < (1u << k); ++r) {
        long e = 0;
        for (unsigned rp = r;; rp = (rp - 1) & r) {
            bool sat = false;
            for (int lit : literals) {
                int v = lit > 0 ? lit : -lit;
                unsigned bit =
                    static_cast<unsigned>(std::find(vars.begin(), vars.end(), v) - vars.begin());
                bool in_rp = (rp >> bit) & 1u;
                if (lit > 0 ? in_rp : !in_rp) {
                    sat = true;
                    break;
                }
            }
            if (sat) e += (__builtin_popcount(r ^ rp) % 2) ? -1 : 1;
            if (rp == 0) break;
        }
        if (e != 0) {
            Int m = d;
            for (unsigned bit = 0; bit < k; ++bit)
                if ((r >> bit) & 1u) m /= P[static_cast<std::size_t>(vars[bit]) - 1];
            out.factors.push_back(BinomialFactor{m, e});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const BinomialFactor& a, const BinomialFactor& b) { return a.m < b.m; });
    return out;
}

BinomialProduct plaisted_not(const BinomialProduct& b) {
    BinomialProduct out{b.d, {}};
    bool saw_d = false;
    for (const BinomialFactor& f : b.factors) {
        long e = -f.e;
        if (f.m == b.d) {
            saw_d = true;
            e += 1;
        }
        if (e != 0) out.factors.push_back(BinomialFactor{f.m, e});
    }
    if (!saw_d) out.factors.push_back(BinomialFactor{b.d, 1});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const BinomialFactor& a, const BinomialFactor& b2) { return a.m < b2.m; });
    return out;
}

std::vector<Int> cyclotomic_indices(const BinomialProduct& b) {
    std::vector<Int> out;
    for (const Int& t : all_divisors(b.d)) {
        long mult = 0;
        for (const BinomialFactor& f : b.factors)
            if (f.m % t == 0) mult += f.e;
        if (mult < 0 || mult > 1)
            throw std::domain_error("cyclotomic_indices: not a squarefree cyclotomic product");
        if (mult == 1) out.push_back(t);
    }
    return out;
}

BinomialProduct from_cyclotomic_indices(const Int& d, const std::vector<Int>& s) {
    std::vector<Int> divs = all_divisors(d);
    for (const Int& t : s)
        if (!std::binary_search(divs.begin(), divs.end(), t))
            throw std::invalid_argument("from_cyclotomic_indices: index does not divide d");
    BinomialProduct out{d, {}};
    for (const Int& m : divs) {
        long e = 0;
        for (const Int& t : s)
            if (t % m == 0) e += moebius(t / m);
        if (e != 0) out.factors.push_back(BinomialFactor{m, e});
    }
    return out;  // divs ascending, so factors arrive sorted
}

BinomialProduct plaisted_or(const BinomialProduct& a, const BinomialProduct& b) {
    if (a.d != b.d) throw std::invalid_argument("plaisted_or: mismatched orders");
    std::vector<Int> sa = cyclotomic_indices(a);
    std::vector<Int> sb = cyclotomic_indices(b);
    std::vector<Int> u;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(u));
    return from_cyclotomic_indices(a.d, u);
}

SparsePoly expand(const BinomialProduct& b, long degree_cap) {
    long degree = 0;
    for (const BinomialFactor& f : b.factors) {
        if (f.e <= 0) continue;
        if (!f.m.fits_slong_p()) throw std::runtime_error("expand: factor degree overflows");
        degree += f.m.get_si() * f.e;
        if (degree > degree_cap) throw std::runtime_error("expand: degree cap exceeded");
    }
    auto binom = [](long m) {
        return SparsePoly::from_terms(
            1, {Term{Int(-1), {0}}, Term{Int(1), {m}}}, false);
    };
    SparsePoly num = SparsePoly::constant(1, Int(1));
    SparsePoly den = SparsePoly::constant(1, Int(1));
    for (const BinomialFactor& f : b.factors) {
        SparsePoly base = binom(f.m.get_si());
        for (long i = 0; i < (f.e > 0 ? f.e : -f.e); ++i) {
            if (f.e > 0)
                num = poly_mul(num, base);
            else
                den = poly_mul(den, base);
        }
    }
    if (den == SparsePoly::constant(1, Int(1))) return num;
    std::optional<SparsePoly> q = divide_univariate_exact(num, den, degree_cap);
    if (!q) throw std::logic_error("expand: factored form does not denote a polynomial");
    return *q;
}

bool vanishes_mod(const BinomialProduct& b, const Int& x, const Int& p) {
    if (mod_reduce(b.d, p) == 0)
        throw std::invalid_argument("vanishes_mod: p must not divide the order");
    long mult = 0;
    for (const BinomialFactor& f : b.factors)
        if (mod_reduce(mod_pow(x, f.m, p) - 1, p) == 0) mult += f.e;
    if (mult < 0) throw std::domain_error("vanishes_mod: pole");
    return mult > 0;
}

SatReduction reduce_3sat(const CnfInstance& cnf, const std::vector<Int>& P) {
    if (cnf.nvars < 0) throw std::invalid_argument("reduce_3sat: negative variable count");
    if (P.size() < static_cast<std::size_t>(cnf.nvars))
        throw std::invalid_argument("reduce_3sat: prime sequence shorter than variable count");
    check_prime_sequence(P);
    SatReduction out;
    out.d = 1;
    for (const Int& q : P) out.d *= q;
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) {
            int v = lit > 0 ? lit : -lit;
            if (v < 1 || v > cnf.nvars)
                throw std::invalid_argument("reduce_3sat: literal variable out of range");
        }
        out.system.push_back(plaisted({clause[0], clause[1], clause[2]}, P));
    }
    return out;
}

SparsePoly collapse_to_single(const SparsePoly& f, long d, const Int& p) {
    if (f.nvars != 1) throw std::invalid_argument("collapse_to_single: univariate input required");
    if (!f.is_zero() && min_exponent(f) < 0)
        throw std::invalid_argument("collapse_to_single: nonnegative exponents required");
    if (d < 1) throw std::invalid_argument("collapse_to_single: order must be positive");
    SparsePoly g = SparsePoly::from_terms(1, {Term{Int(-1), {0}}, Term{Int(1), {d}}}, false);
    return poly_add(poly_mul(f, f), poly_scale(Int(-p), poly_mul(g, g)));
}

bool roots_of_unity_transfer_check(const std::vector<BinomialProduct>& system, const Int& d,
                                   const Int& p) {
    PadicContext gate(p, 1);  // primality check
    if (d < 1) throw std::invalid_argument("transfer check: order must be positive");
    if (mod_reduce(p - 1, d) != 0)
        throw std::invalid_argument("transfer check requires p = 1 (mod d)");
    if (!d.fits_slong_p() || d > 1000000)
        throw std::runtime_error("transfer check: root-of-unity enumeration too large");
    const long dl = d.get_si();

    // Generator of the (cyclic, order-d) group of d-th roots of unity in F_p.
    Int z = 1;
    if (dl > 1) {
        std::vector<Int> qs = prime_factors(d);
        for (Int a = 2;; ++a) {
            if (a >= p) throw std::logic_error("transfer check: no primitive root found");
            Int cand = mod_pow(a, (p - 1) / d, p);
            if (cand == 1) continue;
            bool exact_order = true;
            for (const Int& q : qs)
                if (mod_pow(cand, d / q, p) == 1) {
                    exact_order = false;
                    break;
                }
            if (exact_order) {
                z = cand;
                break;
            }
        }
    }

    Int x = 1;
    for (long j = 0; j < dl; ++j) {
        bool all_vanish = true;
        for (const BinomialProduct& b : system)
            if (!vanishes_mod(b, x, p)) {
                all_vanish = false;
                break;
            }
        if (all_vanish) return true;
        x = mod_reduce(x * z, p);
    }
    return false;
}

CnfInstance read_dimacs(std::istream& in) {
    CnfInstance out;
    std::string line;
    long lineno = 0, expected_clauses = -1;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok[0] == 'c') continue;
        if (tok == "p") {
            if (expected_clauses >= 0) throw dimacs_error(lineno, "duplicate header");
            std::string fmt;
            long nv = -1, nc = -1;
            if (!(ss >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                throw dimacs_error(lineno, "expected 'p cnf <vars> <clauses>'");
            if (nv > std::numeric_limits<int>::max())
                throw dimacs_error(lineno, "variable count out of range");
            out.nvars = static_cast<int>(nv);
            expected_clauses = nc;
            continue;
        }
        if (expected_clauses < 0) throw dimacs_error(lineno, "clause before 'p cnf' header");
        std::istringstream body(line);
        long long v;
        while (body >> v) {
            if (v == 0) {
                if (cur.size() != 3)
                    throw dimacs_error(lineno, "clause must have exactly three literals");
                out.clauses.push_back({cur[0], cur[1], cur[2]});
                cur.clear();
                continue;
            }
            long long a = v > 0 ? v : -v;
            if (a > out.nvars) throw dimacs_error(lineno, "literal variable out of range");
            cur.push_back(static_cast<int>(v));
        }
        if (body.fail() && !body.eof()) throw dimacs_error(lineno, "malformed literal");
    }
    if (expected_clauses < 0) throw dimacs_error(lineno, "missing 'p cnf' header");
    if (!cur.empty()) throw dimacs_error(lineno, "unterminated clause");
    if (static_cast<long>(out.clauses.size()) != expected_clauses)
        throw dimacs_error(lineno, "clause count does not match the header");
    return out;
}

}  // namespace padfeas
