#include "padfeas/primes.hpp"

#include <cmath>
#include <cstddef>

namespace padfeas {

namespace {

// Largest n for which the witness set {2,...,41} is a deterministic
// Miller-Rabin test (Sorenson & Webster).
const Int& deterministic_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

const long kDeterministicWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// true = a proves n composite (n odd, n >= 3).
bool mr_witness_composite(const Int& n, const Int& a) {
    Int base = mod_reduce(a, n);
    if (base == 0) return false;
    Int nm1 = n - 1;
    Int d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x = mod_pow(base, d, n);
    if (x == 1 || x == nm1) return false;
    for (unsigned long r = 1; r < s; ++r) {
        x = mod_reduce(x * x, n);
        if (x == nm1) return false;
    }
    return true;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
// Requires n odd, n >= 3, n not a perfect square, gcd(n, small primes) = 1.
bool strong_lucas_probable(const Int& n) {
    // First D in 5, -7, 9, -11, ... with jacobi(D, n) = -1.
    Int d_param = 5;
    while (true) {
        int j = mpz_jacobi(d_param.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && abs(d_param) != n) return false;  // shares a factor
        d_param = (d_param > 0) ? Int(-(d_param + 2)) : Int(-(d_param - 2));
        if (abs(d_param) > 1000000) return false;  // unreachable for non-squares
    }
    const Int p_param = 1;
    Int q_param = (1 - d_param) / 4;

    Int d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    auto halve = [&n](Int v) {
        if (mpz_odd_p(v.get_mpz_t())) v += n;
        mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
        return mod_reduce(v, n);
    };

    // Binary ladder for U_d, V_d, Q^d mod n, most significant bit first.
    Int u = 1, v = p_param, qk = mod_reduce(q_param, n);
    std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t idx = bits - 1; idx-- > 0;) {
        // double: k -> 2k
        u = mod_reduce(u * v, n);
        v = mod_reduce(v * v - 2 * qk, n);
        qk = mod_reduce(qk * qk, n);
        if (mpz_tstbit(d.get_mpz_t(), idx)) {
            // add one: 2k -> 2k+1
            Int u_next = halve(p_param * u + v);
            Int v_next = halve(d_param * u + p_param * v);
            u = u_next;
            v = v_next;
            qk = mod_reduce(qk * q_param, n);
        }
    }
    if (u == 0 || v == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        v = mod_reduce(v * v - 2 * qk, n);
        qk = mod_reduce(qk * qk, n);
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

Primality classify_prime(const Int& n) {
    if (n < 2) throw std::domain_error("classify_prime: n must be >= 2");
    static const std::vector<Int> small = first_primes(168);  // primes < 1000
    for (const Int& q : small) {
        if (n == q) return Primality::prime;
        if (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) return Primality::composite;
    }
    if (n < deterministic_bound()) {
        for (long w : kDeterministicWitnesses)
            if (mr_witness_composite(n, Int(w))) return Primality::composite;
        return Primality::prime;
    }
    if (mr_witness_composite(n, Int(2))) return Primality::composite;
    if (mpz_perfect_square_p(n.get_mpz_t())) return Primality::composite;
    if (!strong_lucas_probable(n)) return Primality::composite;
    // 64 extra rounds with deterministically seeded bases.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x9e3779b97f4a7c15UL ^ mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffUL));
    for (int round = 0; round < 64; ++round) {
        Int a = 2 + rng.get_z_range(n - 3);
        if (mr_witness_composite(n, a)) return Primality::composite;
    }
    return Primality::probable_prime;
}

bool is_prime(const Int& n) { return classify_prime(n) != Primality::composite; }

std::vector<Int> first_primes(std::size_t k) {
    if (k == 0) return {};
    // Rosser-style upper bound for the k-th prime.
    double kd = static_cast<double>(k);
    std::size_t bound = 15;
    if (k >= 6) {
        double b = kd * (std::log(kd) + std::log(std::log(kd)));
        bound = static_cast<std::size_t>(b) + 2;
    }
    while (true) {
        std::vector<bool> sieve(bound + 1, true);
        std::vector<Int> primes;
        primes.reserve(k);
        for (std::size_t i = 2; i <= bound && primes.size() < k; ++i) {
            if (!sieve[i]) continue;
            primes.emplace_back(static_cast<unsigned long>(i));
            for (std::size_t j = i * i; j <= bound; j += i) sieve[j] = false;
        }
        if (primes.size() == k) return primes;
        bound *= 2;  // bound was too small (tiny k); retry
    }
}

Int primorial(unsigned n) {
    Int d = 1;
    for (const Int& q : first_primes(n)) d *= q;
    return d;
}

ForgeResult forge_prime(const ForgeParams& params) {
    if (params.n < 1) throw std::invalid_argument("forge_prime: n must be >= 1");
    if (!(params.epsilon > 0) || !(params.epsilon < Rat(1, 2)))
        throw std::invalid_argument("forge_prime: epsilon must lie in (0, 1/2)");
    if (params.ell_eff < 1) throw std::invalid_argument("forge_prime: ell_eff must be >= 1");

    // Step 0: L = ceil(2/epsilon) * ell_eff, first n*L primes.
    Int two_over_eps_ceil;
    mpz_cdiv_q(two_over_eps_ceil.get_mpz_t(), Int(2 * params.epsilon.get_den()).get_mpz_t(),
               params.epsilon.get_num().get_mpz_t());
    Int l_big = two_over_eps_ceil * params.ell_eff;
    if (l_big > 1000000) throw std::overflow_error("forge_prime: L too large");
    unsigned long L = l_big.get_ui();
    std::vector<Int> primes = first_primes(static_cast<std::size_t>(L) * params.n);

    auto block_product = [&](unsigned long j) {
        Int m = 1;
        for (unsigned long t = (j - 1) * params.n; t < j * params.n; ++t) m *= primes[t];
        return m;
    };

    // Step 1: x = max(x0, 17, 1 + ceil(sqrt(M_L)) * M_L^2).
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(params.rng_seed);
    Int m_last = block_product(L);
    Int root;
    mpz_sqrt(root.get_mpz_t(), m_last.get_mpz_t());
    if (root * root < m_last) root += 1;
    Int x = 1 + root * m_last * m_last;
    if (x < params.x0_eff) x = params.x0_eff;
    if (x < 17) x = 17;

    unsigned long i;
    if (params.force_block > 0) {
        if (params.force_block > L)
            throw std::invalid_argument("forge_prime: force_block out of range");
        i = params.force_block;
    } else {
        i = 1 + Int(rng.get_z_range(Int(L))).get_ui();
    }
    Int m_i = block_product(i);

    // Step 2: K and the draw bound J (bit-length logs).
    Int k_bound = (x - 1) / m_i;
    unsigned long t = 0;
    while ((Int(1) << t) * params.epsilon < 2) ++t;  // smallest t with 2^t >= 2/epsilon
    unsigned long j_bound = 2 * t * mpz_sizeinbase(x.get_mpz_t(), 2);

    ForgeResult result;
    result.block_index = static_cast<unsigned>(i);
    result.block.assign(primes.begin() + static_cast<long>((i - 1) * params.n),
                        primes.begin() + static_cast<long>(i * params.n));
    result.block_modulus = m_i;
    result.draw_bound = j_bound;
    result.threshold_x = x;

    // Step 3: draw c until prime or J composites.
    auto candidate_is_prime = [&](const Int& q) {
        return params.primality_override ? params.primality_override(q) : is_prime(q);
    };
    unsigned long composites = 0;
    while (composites < j_bound) {
        Int c = 1 + rng.get_z_range(k_bound);
        Int p = 1 + c * m_i;
        ++result.attempts;
        result.c = c;
        result.p = p;
        if (candidate_is_prime(p)) {
            result.is_prime = true;
            return result;
        }
        ++composites;
    }
    result.is_prime = false;  // the "I have failed" branch, after exactly J composites
    return result;
}

std::pair<Int, Int> wagstaff_prime(unsigned n) {
    if (n < 1) throw std::invalid_argument("wagstaff_prime: n must be >= 1");
    Int d = primorial(n);
    if (mpz_sizeinbase(d.get_mpz_t(), 2) > 4096)
        throw std::overflow_error("wagstaff_prime: primorial exceeds 4096 bits");
    for (Int k = 1;; ++k) {
        Int candidate = 1 + k * d;
        if (is_prime(candidate)) return {k, candidate};
    }
}

}  // namespace padfeas
