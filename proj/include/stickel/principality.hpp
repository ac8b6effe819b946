#pragma once

// Principality tests for prime ideals over q: the S2 congruences for
// inertial degree f > 1, the f = (p-1)/2 corollary, and a search for
// principal primes q1 = a mod lambda^(p+1) of prime norm.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

struct PrincipalityReport {
    u64 p = 0;
    u64 q = 0;
    u64 v = 0;
    u64 f = 0;
    u64 m = 0;
    std::vector<i64> s2;                 // S2 coefficients, length m
    std::vector<u64> sigma_values;       // l = 1..m-1: sum_i s2_i v^(l f i) mod p
    mpz_class full_orbit_sum;            // sum_i sum_j v^-(i+jm); p(p-1)/2 by the proof
    bool full_orbit_identity = false;
    bool p_principal = false;            // every sigma value nonzero; otherwise inconclusive
};

// Requires f = ord_p(q) > 1.
PrincipalityReport principality_test(u64 p, u64 q, u64 v);

struct HalfDegreeCorollary {
    u64 p = 0;
    u64 v = 0;
    mpz_class even_sum;  // sum_j v^(-2j), j in [0, (p-3)/2]
    mpz_class odd_sum;   // sum_j v^-(1+2j)
    mpz_class sigma;     // even_sum/p - odd_sum/p
    u64 sigma_mod_p = 0;
    bool total_is_odd = false;  // even_sum + odd_sum = p(p-1)/2, odd
    bool p_principal = false;
};

// Requires p = 3 mod 4 and p > 3 (so that f = (p-1)/2 > 1).
HalfDegreeCorollary half_degree_corollary(u64 p, u64 v);

struct ProbeWitness {
    std::size_t index = 0;     // position in the enumeration
    u64 a = 0;
    std::vector<i64> x;        // q1 = a + lambda^(p+1) x
    mpz_class q;               // |N(q1)|, prime
    mpz_class residue;         // p^((q-1)/p) mod q
    bool holds = false;        // residue == 1
    bool probabilistic = false;  // q >= 2^64: 40 Miller-Rabin rounds
};

struct ProbeOptions {
    std::size_t bound = 10000;  // candidates (a, x) examined
    int coeff_bound = 2;        // x coefficients in [-coeff_bound, coeff_bound]
    int jobs = 0;
};

struct ProbeReport {
    u64 p = 0;
    ProbeOptions options;
    std::size_t examined = 0;
    bool exhausted = false;  // the coefficient box ran out before the bound
    std::vector<ProbeWitness> witnesses;
    std::size_t counterexamples() const;
};

inline constexpr int kProbePrimalityReps = 40;

ProbeReport principal_norm_probe(u64 p, const ProbeOptions& opts = {});

namespace reference {
ProbeReport principal_norm_probe(u64 p, const ProbeOptions& opts = {});
}  // namespace reference

// First `count` vectors of length n with entries in [-r, r], ordered by
// L1 norm and then lexicographically.
std::vector<std::vector<i64>> graded_lex_vectors(std::size_t n, int r, std::size_t count);

}  // namespace stickel
