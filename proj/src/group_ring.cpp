#include "stickel/group_ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stickel/errors.hpp"

namespace stickel {

GroupRingElt::GroupRingElt(u64 p) : p_(p), c_(p - 1, 0) {}

GroupRingElt::GroupRingElt(u64 p, std::vector<i64> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (c_.size() != p - 1) throw invalid_input("GroupRingElt: expected p-1 coefficients");
}

GroupRingElt GroupRingElt::sigma_power(u64 p, i64 k) {
    GroupRingElt g(p);
    g.c_[reduce_mod(k, p - 1)] = 1;
    return g;
}

GroupRingElt GroupRingElt::constant(u64 p, i64 c) {
    GroupRingElt g(p);
    g.c_[0] = c;
    return g;
}

GroupRingElt GroupRingElt::sigma_minus(u64 p, i64 a) {
    GroupRingElt g(p);
    g.c_[1 % (p - 1)] += 1;
    g.c_[0] -= a;
    return g;
}

i64 GroupRingElt::coeff_sum() const { return std::accumulate(c_.begin(), c_.end(), i64{0}); }

bool GroupRingElt::all_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](i64 c) { return c >= 0; });
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& rhs) {
    if (p_ != rhs.p_) throw invalid_input("GroupRingElt: mismatched p");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& rhs) {
    if (p_ != rhs.p_) throw invalid_input("GroupRingElt: mismatched p");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

GroupRingElt& GroupRingElt::operator*=(i64 k) {
    for (auto& c : c_) c *= k;
    return *this;
}

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    if (a.p_ != b.p_) throw invalid_input("GroupRingElt: mismatched p");
    const std::size_t n = a.c_.size();
    GroupRingElt out(a.p_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.c_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n;
            i64 term;
            if (__builtin_mul_overflow(a.c_[i], b.c_[j], &term) || __builtin_add_overflow(out.c_[k], term, &out.c_[k])) {
                throw invariant_violation("GroupRingElt: int64 overflow in product");
            }
        }
    }
    return out;
}

void require_primitive_root(u64 p, u64 v) {
    if (p < 3 || !is_prime(p)) throw invalid_input("p = " + std::to_string(p) + " is not an odd prime");
    if (!is_primitive_root(v % p, p)) {
        throw invalid_input("v = " + std::to_string(v) + " is not a primitive root mod " + std::to_string(p));
    }
}

GroupRingElt stickelberger_S(u64 p, u64 v) {
    require_primitive_root(p, v);
    const auto dlog = dlog_table(v, p);
    GroupRingElt s(p);
    for (u64 t = 1; t < p; ++t) {
        // varpi_t^{-1} = varpi_{t^{-1}}: zeta -> zeta^{t^{-1}} = zeta^{v^i}
        const u64 i = dlog[inv_mod(t, p)];
        s[i] += static_cast<i64>(t);
    }
    return s;
}

GroupRingElt polynomial_P(u64 p, u64 v) {
    require_primitive_root(p, v);
    GroupRingElt g(p);
    for (u64 i = 0; i + 1 < p; ++i) g[i] = static_cast<i64>(canon_power(static_cast<i64>(v), -static_cast<i64>(i), p));
    return g;
}

std::vector<i64> delta_coeffs(u64 p, u64 v) {
    require_primitive_root(p, v);
    const i64 vv = static_cast<i64>(v % p);
    const i64 pp = static_cast<i64>(p);
    std::vector<i64> delta(p - 1);
    for (i64 i = 0; i + 1 < pp; ++i) {
        const i64 prev = static_cast<i64>(canon_power(vv, -(i - 1), p));
        const i64 cur = static_cast<i64>(canon_power(vv, -i, p));
        const i64 num = prev - cur * vv;
        if (num % pp != 0) throw invariant_violation("delta_coeffs: non-integral delta_" + std::to_string(i));
        delta[static_cast<std::size_t>(i)] = num / pp;
    }
    return delta;
}

GroupRingElt polynomial_Q(u64 p, u64 v) { return GroupRingElt(p, delta_coeffs(p, v)); }

Q1Factorization polynomial_Q1_factorization(u64 p, u64 v) {
    const auto delta = delta_coeffs(p, v);
    const u64 half = (p - 1) / 2;
    GroupRingElt low(p);
    for (u64 i = 0; i < half; ++i) low[i] = delta[i];  // i <= (p-3)/2
    Q1Factorization out;
    out.half_sum = GroupRingElt(p);
    for (u64 i = 0; i < half; ++i) out.half_sum[i] = 1;
    out.q1 = (GroupRingElt::constant(p, 1) - GroupRingElt::sigma_power(p, 1)) * low +
             GroupRingElt::sigma_power(p, static_cast<i64>(half)) * (1 - static_cast<i64>(v % p));
    out.holds = (out.q1 * out.half_sum == polynomial_Q(p, v));
    return out;
}

GroupRingElt polynomial_S2(u64 p, u64 q, u64 v) {
    require_primitive_root(p, v);
    if (!is_prime(q) || q == p) throw invalid_input("polynomial_S2: q must be a prime different from p");
    const u64 f = multiplicative_order(q % p, p);
    if (f == 1) throw invalid_input("polynomial_S2: f = 1 (q = 1 mod p); S2 is undefined, use S");
    const u64 m = (p - 1) / f;
    GroupRingElt s2(p);
    for (u64 i = 0; i < m; ++i) {
        i64 orbit = 0;
        for (u64 j = 0; j < f; ++j) orbit += static_cast<i64>(canon_power(static_cast<i64>(v), -static_cast<i64>(i + j * m), p));
        if (orbit % static_cast<i64>(p) != 0) throw invariant_violation("polynomial_S2: orbit sum not divisible by p");
        s2[i] = orbit / static_cast<i64>(p);
    }
    return s2;
}

u64 fp_gr_eval(const GroupRingElt& g, u64 x) {
    const u64 p = g.p();
    u64 acc = 0;
    for (std::size_t i = g.size(); i-- > 0;) acc = (mul_mod(acc, x % p, p) + reduce_mod(g[i], p)) % p;
    return acc;
}

CycInt apply_exponent(const GroupRingElt& g, const CycInt& a, u64 v) {
    if (g.p() != a.p()) throw invalid_input("apply_exponent: mismatched p");
    if (!g.all_nonnegative()) {
        throw invalid_input("apply_exponent: negative coefficient; use apply_exponent_split for numerator/denominator form");
    }
    const u64 p = g.p();
    CycInt result = CycInt::from_integer(p, 1);
    u64 vi = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0) result = result * cyc_pow(galois_apply(static_cast<i64>(vi), a), static_cast<u64>(g[i]));
        vi = mul_mod(vi, v % p, p);
    }
    return result;
}

std::pair<CycInt, CycInt> apply_exponent_split(const GroupRingElt& g, const CycInt& a, u64 v) {
    GroupRingElt pos(g.p()), neg(g.p());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= 0) pos[i] = g[i];
        else neg[i] = -g[i];
    }
    return {apply_exponent(pos, a, v), apply_exponent(neg, a, v)};
}

std::vector<mpz_class> p_product_difference(u64 p, u64 v) {
    require_primitive_root(p, v);
    const std::size_t n = p - 1;
    // prod over k in [0, p-2], k != 1, of (x - v^k), reduced mod x^n - 1
    std::vector<mpz_class> prod(n);
    prod[0] = 1;
    for (u64 k = 0; k + 1 < p; ++k) {
        if (k == 1) continue;
        const mpz_class root = static_cast<unsigned long>(canon_power(static_cast<i64>(v), static_cast<i64>(k), p));
        std::vector<mpz_class> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (prod[i] == 0) continue;
            next[(i + 1) % n] += prod[i];
            next[i] -= prod[i] * root;
        }
        prod = std::move(next);
    }
    const mpz_class lead = static_cast<unsigned long>(canon_power(static_cast<i64>(v), -static_cast<i64>(p - 2), p));
    const GroupRingElt P = polynomial_P(p, v);
    std::vector<mpz_class> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = mpz_class(static_cast<long>(P[i])) - lead * prod[i];
    return diff;
}

GroupRingElt polynomial_Qd(u64 p, u64 v, u64 d) {
    require_primitive_root(p, v);
    if (d < 1 || d > p - 2) throw invalid_input("polynomial_Qd: d must lie in [1, p-2]");
    const auto dlog = dlog_table(v, p);
    const i64 ind = static_cast<i64>(dlog[d % p]);
    const i64 half = static_cast<i64>((p - 1) / 2);
    GroupRingElt g(p);
    for (i64 i = 0; i + 1 < static_cast<i64>(p); ++i) {
        const u64 a = canon_power(static_cast<i64>(v), half - i, p);
        const u64 b = canon_power(static_cast<i64>(v), half - i + ind, p);
        if (a + b > p) g[static_cast<std::size_t>(i)] = 1;
    }
    return g;
}

}  // namespace stickel
