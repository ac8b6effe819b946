#pragma once

// Exact arithmetic in Z[zeta_p] and Z[zeta_p, zeta_q], Galois actions,
// norms, and the two kinds of valuations the verification suites need:
// at the ramified prime (lambda) and at split primes above q.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

// Element sum_{i=0}^{p-2} c_i zeta_p^i, reduced modulo Phi_p.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(u64 p);
    CycInt(u64 p, std::vector<mpz_class> coeffs);

    static CycInt from_integer(u64 p, const mpz_class& n);
    static CycInt zeta_power(u64 p, i64 k);
    static CycInt lambda(u64 p);  // zeta_p - 1

    u64 p() const { return p_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    mpz_class& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const;  // only the constant coefficient may be nonzero

    CycInt& operator+=(const CycInt& rhs);
    CycInt& operator-=(const CycInt& rhs);
    CycInt& operator*=(const mpz_class& k);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const mpz_class& k) { return a *= k; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator-(CycInt a);
    friend bool operator==(const CycInt& a, const CycInt& b);

    // Reduces a length-p vector of coefficients of zeta^0..zeta^(p-1).
    static CycInt from_cyclic(u64 p, std::vector<mpz_class> cyclic);

private:
    u64 p_ = 0;
    std::vector<mpz_class> c_;
};

CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_pow(const CycInt& a, u64 e);

// zeta -> zeta^t.
CycInt galois_apply(i64 t, const CycInt& a);
CycInt conjugate(const CycInt& a);

// Product of the p-1 conjugates.
mpz_class norm(const CycInt& a);

// Content gcd of the coefficients (nonnegative).
mpz_class content(const CycInt& a);

struct Valuation {
    unsigned value = 0;
    bool infinite = false;  // argument was zero
    bool capped = false;    // value is only a lower bound

    bool operator==(const Valuation&) const = default;
};

// Exact division by lambda; throws invariant_violation if lambda does not divide a.
CycInt divide_by_lambda(const CycInt& a);

// Largest k with lambda^k | a, computed by iterated exact division.
// cap == 0 selects the default 4p.
Valuation lambda_valuation(const CycInt& a, unsigned cap = 0);

// ---------------------------------------------------------------------------

// Element sum c_{ij} zeta_p^i zeta_q^j with i in [0, p-2], j in [0, q-2].
class BiCycInt {
public:
    BiCycInt() = default;
    BiCycInt(u64 p, u64 q);

    static BiCycInt from_cyc(const CycInt& a, u64 q);
    static BiCycInt monomial(u64 p, u64 q, i64 i, i64 j);
    static BiCycInt from_integer(u64 p, u64 q, const mpz_class& n);

    u64 p() const { return p_; }
    u64 q() const { return q_; }
    std::size_t rows() const { return p_ - 1; }
    std::size_t cols() const { return q_ - 1; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return c_[i * cols() + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return c_[i * cols() + j]; }
    const std::vector<mpz_class>& data() const { return c_; }

    bool is_zero() const;
    // Coefficient of zeta_q^j, an element of Z[zeta_p].
    CycInt slice(std::size_t j) const;
    // All zeta_q^j with j >= 1 vanish.
    bool in_zeta_p() const;
    CycInt to_cyc() const;  // requires in_zeta_p()
    // Trace to Z[zeta_p]: sum over zeta_q -> zeta_q^t, t in [1, q-1].
    CycInt relative_trace() const;

    BiCycInt& operator+=(const BiCycInt& rhs);
    BiCycInt& operator-=(const BiCycInt& rhs);
    friend BiCycInt operator+(BiCycInt a, const BiCycInt& b) { return a += b; }
    friend BiCycInt operator-(BiCycInt a, const BiCycInt& b) { return a -= b; }
    friend BiCycInt operator*(const BiCycInt& a, const BiCycInt& b);
    friend bool operator==(const BiCycInt& a, const BiCycInt& b);

    // Reduces a p x q cyclic array (row-major) of zeta_p^i zeta_q^j coefficients.
    static BiCycInt from_cyclic(u64 p, u64 q, std::vector<mpz_class> cyclic);

private:
    u64 p_ = 0;
    u64 q_ = 0;
    std::vector<mpz_class> c_;
};

// OpenMP kernel: each thread owns a row of the cyclic product.
BiCycInt bicyc_mul(const BiCycInt& a, const BiCycInt& b);
BiCycInt bicyc_pow(const BiCycInt& a, u64 e);

namespace reference {
// Single-threaded schoolbook product, kept as the oracle for bicyc_mul.
BiCycInt bicyc_mul(const BiCycInt& a, const BiCycInt& b);
}  // namespace reference

// zeta_p -> zeta_p^s, zeta_q -> zeta_q^t.
BiCycInt bi_galois(i64 s, i64 t, const BiCycInt& a);
// zeta_p^k * a
BiCycInt shift_zeta_p(const BiCycInt& a, i64 k);
BiCycInt conjugate(const BiCycInt& a);

// min over zeta_q-slices of the lambda-valuation.
Valuation lambda_valuation(const BiCycInt& a, unsigned cap = 0);

// ---------------------------------------------------------------------------
// Split primes q = 1 (mod p): the p-1 prime ideals (q, zeta - r_t).

struct HenselRoot {
    u64 p = 0;
    u64 q = 0;
    unsigned precision = 0;  // N
    mpz_class modulus;       // q^N
    mpz_class root;          // Phi_p(root) = 0 mod q^N
    u64 label = 0;           // root = r_1^label mod q, r_1 the smallest root mod q
};

std::vector<HenselRoot> hensel_roots(u64 p, u64 q, unsigned precision);

// The same root lifted to a new precision.
HenselRoot relift(const HenselRoot& h, unsigned precision);

struct IdealValuationOptions {
    unsigned initial_precision = 0;  // 0 -> 2p + 4
    unsigned max_precision = 0;      // 0 -> 16p
};

// Valuation of a at the prime (q, zeta - root). The rational content q^e
// is split off before evaluation and added back to the result.
unsigned ideal_valuation(const CycInt& a, const HenselRoot& h, IdealValuationOptions opts = {});

// v_q of a nonzero integer.
unsigned int_valuation(const mpz_class& n, u64 q);

}  // namespace stickel
