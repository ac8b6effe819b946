#include <doctest.h>

#include "oracles.hpp"
#include "stickel/errors.hpp"
#include "stickel/group_ring.hpp"

using namespace stickel;

namespace {

// S = sum_t t * varpi_t^{-1}, with varpi_t^{-1} located by searching the
// exponent i such that sigma^i sends zeta to zeta^{t^{-1}}.
GroupRingElt literal_S(u64 p, u64 v) {
    GroupRingElt s(p);
    for (u64 t = 1; t < p; ++t) {
        u64 tinv = 1;
        while (tinv * t % p != 1) ++tinv;
        for (u64 i = 0; i + 1 < p; ++i) {
            if (oracle::slow_pow(v, i, p) == tinv) s[i] += static_cast<i64>(t);
        }
    }
    return s;
}

}  // namespace

TEST_SUITE("group_ring") {

TEST_CASE("worked examples for p = 5, v = 2") {
    CHECK(stickelberger_S(5, 2).coeffs() == std::vector<i64>{1, 3, 4, 2});
    CHECK(polynomial_P(5, 2).coeffs() == std::vector<i64>{1, 3, 4, 2});
    CHECK(delta_coeffs(5, 2) == std::vector<i64>{0, -1, -1, 0});
    CHECK(fp_gr_eval(polynomial_Q(5, 2), 1) == 3);
    CHECK(fp_gr_eval(polynomial_P(5, 2), 2) == 4);  // P(v) = -1
    CHECK(fp_gr_eval(polynomial_Q(5, 2), 0) == 0);
}

TEST_CASE("S2 examples") {
    CHECK(polynomial_S2(7, 2, 3)[0] == 1);
    CHECK(polynomial_S2(7, 2, 3)[1] == 2);
    CHECK(polynomial_S2(5, 3, 2)[0] == 2);
    CHECK_THROWS_AS(polynomial_S2(5, 11, 2), invalid_input);
    CHECK_THROWS_AS(polynomial_S2(5, 5, 2), invalid_input);
    CHECK_THROWS_AS(polynomial_S2(5, 9, 2), invalid_input);
}

TEST_CASE("S equals P and the literal definition, p <= 500") {
    for (u64 p : primes_up_to(500)) {
        if (p == 2) continue;
        const u64 v = primitive_root(p);
        const GroupRingElt S = stickelberger_S(p, v);
        REQUIRE(S == polynomial_P(p, v));
        if (p < 120) REQUIRE(S == literal_S(p, v));
    }
}

TEST_CASE("P (sigma - v) = p Q, delta range, Q = Q1 * half-sum, p <= 500") {
    for (u64 p : primes_up_to(500)) {
        if (p == 2) continue;
        const u64 v = primitive_root(p);
        const GroupRingElt P = polynomial_P(p, v);
        const GroupRingElt Q = polynomial_Q(p, v);
        CAPTURE(p);
        REQUIRE(P * GroupRingElt::sigma_minus(p, static_cast<i64>(v)) == Q * static_cast<i64>(p));
        const auto d = delta_coeffs(p, v);
        REQUIRE(d[0] == 0);
        for (i64 x : d) REQUIRE((x <= 0 && x > -static_cast<i64>(p)));
        // delta_i = -floor(v^{-i} v / p)
        for (u64 i = 0; i + 1 < p; ++i) REQUIRE(d[i] == -static_cast<i64>(canon_power(static_cast<i64>(v), -static_cast<i64>(i), p) * v / p));
        REQUIRE(polynomial_Q1_factorization(p, v).holds);
    }
}

TEST_CASE("identities hold for every primitive root, p < 60") {
    for (u64 p : primes_up_to(60)) {
        if (p == 2) continue;
        for (u64 v = 2; v < p; ++v) {
            if (!is_primitive_root(v, p)) continue;
            CHECK(stickelberger_S(p, v) == polynomial_P(p, v));
            CHECK(polynomial_Q1_factorization(p, v).holds);
        }
    }
    CHECK_THROWS_AS(polynomial_P(7, 2), invalid_input);
    CHECK_THROWS_AS(polynomial_P(9, 2), invalid_input);
}

TEST_CASE("S2 integrality and refolding S = sum over f-orbits") {
    for (u64 p : primes_up_to(200)) {
        if (p == 2) continue;
        const u64 v = primitive_root(p);
        const GroupRingElt S = stickelberger_S(p, v);
        for (u64 f = 2; f <= p - 1; ++f) {
            if ((p - 1) % f != 0) continue;
            u64 q = 2;
            while (q == p || !is_prime(q) || multiplicative_order(q % p, p) != f) ++q;
            const u64 m = (p - 1) / f;
            const GroupRingElt s2 = polynomial_S2(p, q, v);
            CAPTURE(p);
            CAPTURE(q);
            for (u64 i = 0; i < m; ++i) {
                i64 orbit = 0;
                for (u64 j = 0; j < f; ++j) orbit += S[i + j * m];
                REQUIRE(orbit == static_cast<i64>(p) * s2[i]);
            }
            for (u64 i = m; i + 1 < p; ++i) REQUIRE(s2[i] == 0);
            REQUIRE(s2.coeff_sum() * static_cast<i64>(p) == static_cast<i64>(p * (p - 1) / 2));
        }
    }
}

TEST_CASE("group ring arithmetic") {
    const GroupRingElt a(7, {1, 2, 0, 0, 0, 3}), b = GroupRingElt::sigma_power(7, 1);
    CHECK((a * b).coeffs() == std::vector<i64>{3, 1, 2, 0, 0, 0});
    CHECK(GroupRingElt::sigma_power(7, 6) == GroupRingElt::constant(7, 1));
    CHECK(GroupRingElt::sigma_power(7, -1) == GroupRingElt::sigma_power(7, 5));
    const GroupRingElt big(5, {i64{1} << 62, 0, 0, 0});
    CHECK_THROWS_AS(big * GroupRingElt::constant(5, 4), invariant_violation);
}

TEST_CASE("apply_exponent") {
    std::mt19937_64 rng(11);
    const u64 p = 5, v = 2;
    const CycInt a = oracle::random_cyc(p, rng, 3);
    CHECK(apply_exponent(GroupRingElt::constant(p, 1), a, v) == a);
    const GroupRingElt P = polynomial_P(p, v);
    CHECK(apply_exponent(P, CycInt::zeta_power(p, 1), v) == CycInt::zeta_power(p, 4));
    mpz_class n10;
    mpz_ui_pow_ui(n10.get_mpz_t(), 3, 10);
    CHECK(apply_exponent(P, CycInt::from_integer(p, 3), v) == CycInt::from_integer(p, n10));
    // sigma^i acts as zeta -> zeta^{v^i}
    CHECK(apply_exponent(GroupRingElt::sigma_power(p, 3), a, v) == galois_apply(8, a));

    const GroupRingElt Q = polynomial_Q(p, v);
    CHECK_THROWS_AS(apply_exponent(Q, a, v), invalid_input);
    // Q = -sigma - sigma^2: everything lands in the denominator.
    const auto [num, den] = apply_exponent_split(Q, a, v);
    CHECK(den == apply_exponent(GroupRingElt(p, {0, 1, 1, 0}), a, v));
    CHECK(num == CycInt::from_integer(p, 1));
}

TEST_CASE("P minus the expanded product is divisible by p, p <= 60") {
    for (u64 p : primes_up_to(60)) {
        if (p == 2) continue;
        const u64 v = primitive_root(p);
        for (const auto& c : p_product_difference(p, v)) REQUIRE(c % static_cast<unsigned long>(p) == 0);
    }
}

TEST_CASE("Q_d index sets") {
    // p = 5, v = 2, d = 1: v^{2-i} = 4, 2, 1, 3 and the set keeps 2 v^{2-i} > 5.
    CHECK(polynomial_Qd(5, 2, 1).coeffs() == std::vector<i64>{1, 0, 0, 1});
    for (u64 p : {5, 7, 11, 13, 101}) {
        const u64 v = primitive_root(p);
        // d = 1 keeps exactly the residues above p/2.
        CHECK(polynomial_Qd(p, v, 1).coeff_sum() == static_cast<i64>((p - 1) / 2));
        for (u64 d = 1; d + 2 <= p; ++d) {
            const GroupRingElt qd = polynomial_Qd(p, v, d);
            for (i64 c : qd.coeffs()) CHECK((c == 0 || c == 1));
        }
        CHECK_THROWS_AS(polynomial_Qd(p, v, 0), invalid_input);
        CHECK_THROWS_AS(polynomial_Qd(p, v, p - 1), invalid_input);
    }
}

}
