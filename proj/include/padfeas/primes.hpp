#pragma once

#include "padfeas/padic.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace padfeas {

enum class Primality {
    composite,
    probable_prime,  // passed BPSW + 64 Miller-Rabin rounds beyond the deterministic range
    prime,           // proven by the deterministic witness set (n < 3.317e24)
};

// Exact below 3,317,044,064,679,887,385,961,981 via the 13-witness
// deterministic Miller-Rabin set; BPSW plus 64 seeded Miller-Rabin rounds
// beyond. Rejects n < 2.
Primality classify_prime(const Int& n);

// classify_prime(n) != composite.
bool is_prime(const Int& n);

// First k primes in increasing order (sieve of Eratosthenes).
std::vector<Int> first_primes(std::size_t k);

// Product of the first n primes.
Int primorial(unsigned n);

/**
 * Randomized construction of p = 1 + c*M_i with M_i a block product of
 * consecutive primes:
 *   0. L := ceil(2/epsilon) * ell_eff; list the first n*L primes.
 *   1. M_j := product of primes (j-1)n+1 .. jn; draw i uniformly from [L];
 *      x := max(x0_eff, 17, 1 + ceil(sqrt(M_L)) * M_L^2).
 *   2. K := floor((x-1)/M_i); J := 2 * ceil(log2(2/epsilon)) * bitlen(x).
 *   3. Draw c uniformly from [K] until 1 + c*M_i is prime or J composites seen.
 * Logs are taken as integer bit lengths, which only enlarges J (conservative).
 */
struct ForgeParams {
    unsigned n = 1;           // block length
    Rat epsilon = Rat(1, 3);  // failure probability target, in (0, 1/2)
    long ell_eff = 1;         // effective progression-density cardinality (>= 1)
    Int x0_eff = 17;          // effective sampling threshold (>= 1)
    unsigned long rng_seed = 0;
    unsigned force_block = 0;  // when > 0: use block i = force_block instead of a random i
    // Test hook: replaces the candidate primality check when set.
    std::function<bool(const Int&)> primality_override;
};

struct ForgeResult {
    bool is_prime = false;  // success flag; the declaration is always truthful
    unsigned block_index = 0;       // i in [1..L]
    std::vector<Int> block;         // primes p_{(i-1)n+1} .. p_{in}
    Int block_modulus;              // M_i
    Int c;                          // multiplier; p = 1 + c*M_i on success
    Int p;                          // last candidate tested (the prime on success)
    unsigned long attempts = 0;     // candidates drawn
    unsigned long draw_bound = 0;   // J
    Int threshold_x;                // x from step 1
};

ForgeResult forge_prime(const ForgeParams& params);

// Least k >= 1 with 1 + k*primorial(n) prime; returns (k, that prime).
// Rejects n with bitlen(primorial(n)) > 4096.
std::pair<Int, Int> wagstaff_prime(unsigned n);

}  // namespace padfeas
