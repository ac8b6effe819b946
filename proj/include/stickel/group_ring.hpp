#pragma once

// The group ring Z[G_p] with G_p = <sigma>, sigma: zeta_p -> zeta_p^v, and
// the Stickelberger-derived elements built from a primitive root v.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "stickel/arith.hpp"
#include "stickel/cyclotomic.hpp"

namespace stickel {

// sum_{i=0}^{p-2} c_i sigma^i with sigma^(p-1) = 1.
class GroupRingElt {
public:
    GroupRingElt() = default;
    explicit GroupRingElt(u64 p);
    GroupRingElt(u64 p, std::vector<i64> coeffs);

    static GroupRingElt sigma_power(u64 p, i64 k);
    static GroupRingElt constant(u64 p, i64 c);
    // sigma - a
    static GroupRingElt sigma_minus(u64 p, i64 a);

    u64 p() const { return p_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<i64>& coeffs() const { return c_; }
    i64 operator[](std::size_t i) const { return c_[i]; }
    i64& operator[](std::size_t i) { return c_[i]; }

    i64 coeff_sum() const;
    bool all_nonnegative() const;

    GroupRingElt& operator+=(const GroupRingElt& rhs);
    GroupRingElt& operator-=(const GroupRingElt& rhs);
    GroupRingElt& operator*=(i64 k);
    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
    friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
    friend GroupRingElt operator*(GroupRingElt a, i64 k) { return a *= k; }
    // Throws invariant_violation on int64 overflow.
    friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

private:
    u64 p_ = 0;
    std::vector<i64> c_;
};

// Validates v as a primitive root mod the odd prime p.
void require_primitive_root(u64 p, u64 v);

// sum_t t * varpi_t^{-1}, translated through varpi_{v^-i}^{-1} = sigma^i.
GroupRingElt stickelberger_S(u64 p, u64 v);

// sum_i v^{-i} sigma^i.
GroupRingElt polynomial_P(u64 p, u64 v);

// delta_i = (v^{-(i-1)} - v^{-i} v) / p for i in [0, p-2].
std::vector<i64> delta_coeffs(u64 p, u64 v);

// sum_i delta_i sigma^i; satisfies P (sigma - v) = p Q.
GroupRingElt polynomial_Q(u64 p, u64 v);

struct Q1Factorization {
    GroupRingElt q1;
    GroupRingElt half_sum;  // 1 + sigma + ... + sigma^((p-3)/2)
    bool holds = false;     // Q == Q1 * half_sum
};

Q1Factorization polynomial_Q1_factorization(u64 p, u64 v);

// S_2 = sum_{i<m} (sum_{j<f} v^{-(i+jm)} / p) sigma^i, m = (p-1)/f, f = ord_p(q) > 1.
// Returned with p-1 slots; slots >= m are zero.
GroupRingElt polynomial_S2(u64 p, u64 q, u64 v);

// sum_i c_i x^i mod p.
u64 fp_gr_eval(const GroupRingElt& g, u64 x);

// a^{sum c_i sigma^i} = prod_i sigma^i(a)^{c_i}; all c_i must be >= 0.
CycInt apply_exponent(const GroupRingElt& g, const CycInt& a, u64 v);

// Numerator/denominator pair for an exponent with mixed signs:
// a^g = first / second with g = g+ - g-.
std::pair<CycInt, CycInt> apply_exponent_split(const GroupRingElt& g, const CycInt& a, u64 v);

// P - T with T = v^{-(p-2)} prod_{k != 1} (sigma - v^k), expanded exactly in
// Z[x]/(x^(p-1) - 1). Every entry is divisible by p.
std::vector<mpz_class> p_product_difference(u64 p, u64 v);

// sum_{i in I_d} sigma^i with I_d = {i : v^{(p-1)/2-i} + v^{(p-1)/2-i+ind_v(d)} > p}.
GroupRingElt polynomial_Qd(u64 p, u64 v, u64 d);

}  // namespace stickel
