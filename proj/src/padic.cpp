#include "padfeas/padic.hpp"

#include "padfeas/primes.hpp"

namespace padfeas {

namespace {

void require_p(const Int& p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
}

}  // namespace

Valuation ord_p(const Int& a, const Int& p) {
    require_p(p);
    if (a == 0) return Valuation::inf();
    Int rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return Valuation::of(static_cast<long>(k));
}

Valuation ord_p(const Rat& a, const Int& p) {
    if (a == 0) return Valuation::inf();
    return ord_p(Int(a.get_num()), p) - ord_p(Int(a.get_den()), p);
}

Int unit_part(const Int& a, const Int& p) {
    require_p(p);
    if (a == 0) throw std::domain_error("unit_part of zero");
    Int rest;
    mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return rest;
}

Rat unit_part(const Rat& a, const Int& p) {
    if (a == 0) throw std::domain_error("unit_part of zero");
    Rat r(unit_part(Int(a.get_num()), p), unit_part(Int(a.get_den()), p));
    r.canonicalize();
    return r;
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    if (m == 1) return 0;
    Int b = base;
    Int e = exp;
    if (e < 0) {
        b = mod_inverse(b, m);
        e = -e;
    }
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod " + m.get_str());
    return r;
}

Int mod_reduce(const Int& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_reduce: modulus must be >= 1");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_reduce(const Rat& a, const Int& m) {
    Int num = mod_reduce(Int(a.get_num()), m);
    Int inv = mod_inverse(Int(a.get_den()), m);
    return mod_reduce(num * inv, m);
}

int legendre(const Int& a, const Int& p) {
    if (p == 2 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("legendre: p must be an odd prime");
    require_p(p);
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

ExtGcd ext_gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0) throw std::invalid_argument("ext_gcd(0, 0)");
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.a.get_mpz_t(), r.b.get_mpz_t(), x.get_mpz_t(),
               y.get_mpz_t());
    return r;
}

namespace {

// Legendre symbol of a rational p-adic unit, via num * den^{-1} mod p.
int legendre_unit(const Rat& u, const Int& p) {
    return legendre(mod_reduce(u, p), p);
}

// (u-1)/2 mod 2 for an odd residue class: 0 iff u = 1 mod 4.
int eps4(const Int& u8) { return (mod_reduce(u8, 4) == 1) ? 0 : 1; }

// (u^2-1)/8 mod 2 for an odd residue class: 1 iff u = ±3 mod 8.
int omega8(const Int& u8) { return (u8 == 3 || u8 == 5) ? 1 : 0; }

}  // namespace

int hilbert(const Rat& a, const Rat& b, const Int& p) {
    require_p(p);
    if (a == 0 || b == 0) throw std::domain_error("hilbert: a, b must be nonzero");
    long j = ord_p(a, p).value();
    long k = ord_p(b, p).value();
    Rat u = unit_part(a, p);
    Rat v = unit_part(b, p);
    if (p != 2) {
        bool eps = ((p - 1) / 2) % 2 != 0;  // (p-1)/2 mod 2
        int sign = (eps && (j % 2 != 0) && (k % 2 != 0)) ? -1 : 1;
        int lu = (k % 2 != 0) ? legendre_unit(u, p) : 1;
        int lv = (j % 2 != 0) ? legendre_unit(v, p) : 1;
        return sign * lu * lv;
    }
    Int u8 = mod_reduce(u, Int(8));
    Int v8 = mod_reduce(v, Int(8));
    int z = eps4(u8) * eps4(v8) + static_cast<int>(j % 2 != 0) * omega8(v8) +
            static_cast<int>(k % 2 != 0) * omega8(u8);
    return (z % 2 != 0) ? -1 : 1;
}

PadicContext::PadicContext(Int prime, long precision) : p(std::move(prime)), ell(precision) {
    if (ell < 1) throw std::invalid_argument("PadicContext: ell must be >= 1");
    if (p < 2 || classify_prime(p) == Primality::composite)
        throw std::invalid_argument("PadicContext: p must be prime");
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(ell));
}

bool PadicContext::is_unit(const Int& a) const {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return g == 1;
}

}  // namespace padfeas
