#pragma once

// Modular arithmetic on machine words, primitive roots, and the finite
// fields F_{q^f} that serve as residue fields of primes of Z[zeta_p].

#include <cstdint>
#include <vector>

namespace stickel {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; throws invalid_input when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

// Reduces any signed integer into [0, m).
u64 reduce_mod(i64 a, u64 m);

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);

std::vector<u64> primes_up_to(u64 n);

// Distinct prime factors by trial division, ascending.
std::vector<u64> prime_factors(u64 n);

// Order of a in (Z/nZ)^*; n must be prime.
u64 multiplicative_order(u64 a, u64 n);

bool is_primitive_root(u64 v, u64 p);

// Smallest generator of (Z/pZ)^*. p must be an odd prime.
u64 primitive_root(u64 p);

// Representative of v^k mod p in [1, p-1]; negative k inverts.
u64 canon_power(i64 v, i64 k, u64 p);

// Discrete-log table of v modulo p: dlog[v^i mod p] = i for i in [0, p-2].
std::vector<u64> dlog_table(u64 v, u64 p);

// ---------------------------------------------------------------------------
// Finite fields F_{q^f} in a polynomial basis.

struct FFElem {
    std::vector<u64> coeffs;  // length f, entries in [0, q-1]

    bool operator==(const FFElem&) const = default;
    bool is_zero() const;
};

struct FieldDesc {
    u64 p = 0;
    u64 q = 0;
    unsigned f = 0;
    u64 order = 0;                  // q^f
    std::vector<u64> modulus_poly;  // monic, degree f, low coefficient first
    FFElem generator;               // generates F_{q^f}^*
    FFElem zeta_p_image;            // generator^((q^f - 1) / p), order exactly p
};

// Largest q^f accepted by field_make.
inline constexpr u64 kMaxFieldOrder = u64{1} << 28;

// Builds the residue field of a prime over q in Z[zeta_p]. q = 2 is
// accepted; q = p, composite inputs, and q^f > kMaxFieldOrder are rejected.
FieldDesc field_make(u64 p, u64 q);

namespace ff {

FFElem zero(const FieldDesc& fd);
FFElem one(const FieldDesc& fd);
FFElem from_int(const FieldDesc& fd, u64 a);
FFElem add(const FieldDesc& fd, const FFElem& a, const FFElem& b);
FFElem mul(const FieldDesc& fd, const FFElem& a, const FFElem& b);
FFElem pow(const FieldDesc& fd, const FFElem& a, u64 e);
FFElem frobenius(const FieldDesc& fd, const FFElem& a);

// Element with the given base-q digits as coefficients (index < q^f).
FFElem from_index(const FieldDesc& fd, u64 index);

}  // namespace ff

// c with x^((q^f-1)/p) = zeta_p_image^c. The character of x is zeta_p^(-c).
u64 residue_char_exponent(const FFElem& x, const FieldDesc& fd);

// x + x^q + ... + x^(q^(f-1)), an element of F_q.
u64 ff_trace(const FFElem& x, const FieldDesc& fd);

// Irreducibility over F_q of a monic polynomial (low coefficient first).
bool is_irreducible(const std::vector<u64>& poly, u64 q);

}  // namespace stickel
