#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padfeas {

using Int = mpz_class;
using Rat = mpq_class;

/**
 * Element of Z ∪ {+infinity}: the value group of ord_p on Q.
 * Infinity arises only as ord of zero and compares greater than
 * every finite value.
 */
struct Valuation {
    bool infinite = false;
    long finite = 0;  // meaningful only when !infinite

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation of(long k) { return Valuation{false, k}; }

    bool is_infinite() const { return infinite; }
    bool is_finite() const { return !infinite; }

    long value() const {
        if (infinite) throw std::domain_error("valuation is infinite");
        return finite;
    }

    Valuation operator+(const Valuation& o) const {
        if (infinite || o.infinite) return inf();
        return of(finite + o.finite);
    }
    Valuation operator-(const Valuation& o) const {
        if (o.infinite) throw std::domain_error("cannot subtract infinite valuation");
        if (infinite) return inf();
        return of(finite - o.finite);
    }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || finite == o.finite);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return finite < o.finite;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }
};

// Greatest k with p^k | a; Infinity for a = 0. Requires p >= 2.
Valuation ord_p(const Int& a, const Int& p);
// ord of a rational: ord(num) - ord(den).
Valuation ord_p(const Rat& a, const Int& p);

// a / p^{ord_p a}; rejects a = 0.
Int unit_part(const Int& a, const Int& p);
Rat unit_part(const Rat& a, const Int& p);

// base^exp mod m (m >= 1) by square-and-multiply; negative exp goes through
// the modular inverse and requires gcd(base, m) = 1.
Int mod_pow(const Int& base, const Int& exp, const Int& m);

// Inverse of a mod m; throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

// Representative of a in [0, m).
Int mod_reduce(const Int& a, const Int& m);
// num * den^{-1} mod m; the denominator must be invertible mod m.
Int mod_reduce(const Rat& a, const Int& m);

// Exact-match overloads for gmpxx expression templates (an expression like
// a*b converts to both Int and Rat, which would otherwise be ambiguous).
template <class E>
Int mod_reduce(const __gmp_expr<mpz_t, E>& a, const Int& m) {
    return mod_reduce(Int(a), m);
}
template <class E>
Int mod_reduce(const __gmp_expr<mpq_t, E>& a, const Int& m) {
    return mod_reduce(Rat(a), m);
}

// Legendre symbol for odd prime p, extended by 0 when p | a.
int legendre(const Int& a, const Int& p);

struct ExtGcd {
    Int g, a, b;  // g = gcd(x, y) > 0 and g = a*x + b*y
};
// Rejects (0, 0).
ExtGcd ext_gcd(const Int& x, const Int& y);

/**
 * Hilbert symbol (a,b)_p: +1 iff a x^2 + b y^2 = z^2 has a nontrivial
 * solution over Q_p, computed by the closed formulas (odd p via Legendre
 * symbols of unit parts, p = 2 via the mod-8 character exponent).
 * Rejects a = 0 or b = 0.
 */
int hilbert(const Rat& a, const Rat& b, const Int& p);

/**
 * Working ring Z/p^ell. p is primality-checked on construction, ell >= 1.
 * Immutable after construction; safe to share across threads.
 */
struct PadicContext {
    Int p;
    long ell;
    Int modulus;  // p^ell

    PadicContext(Int prime, long precision);

    Int reduce(const Int& a) const { return mod_reduce(a, modulus); }
    Int reduce(const Rat& a) const { return mod_reduce(a, modulus); }
    template <class E>
    Int reduce(const __gmp_expr<mpz_t, E>& a) const {
        return mod_reduce(Int(a), modulus);
    }
    template <class E>
    Int reduce(const __gmp_expr<mpq_t, E>& a) const {
        return mod_reduce(Rat(a), modulus);
    }
    // Inverse of a unit mod p^ell; throws std::domain_error on non-units.
    Int inverse(const Int& a) const { return mod_inverse(a, modulus); }
    bool is_unit(const Int& a) const;
};

}  // namespace padfeas
