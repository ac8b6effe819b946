#pragma once

// Independent ground truth for the unit tests. Nothing here calls into the
// library's algorithms: complex embeddings, brute-force searches and the
// power-sum congruence for Bernoulli numbers.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "stickel/cyclotomic.hpp"

namespace oracle {

using stickel::i64;
using stickel::u64;
using cplx = std::complex<long double>;

inline bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline u64 slow_pow(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    for (u64 i = 0; i < e; ++i) r = static_cast<u64>((unsigned __int128)r * b % m);
    return r;
}

// Smallest primitive root by checking that the powers hit every residue.
inline u64 brute_primitive_root(u64 p) {
    for (u64 g = 2; g < p; ++g) {
        std::vector<bool> seen(p, false);
        u64 x = 1, count = 0;
        for (u64 i = 0; i + 1 < p; ++i) {
            if (!seen[x]) ++count;
            seen[x] = true;
            x = x * g % p;
        }
        if (count == p - 1) return g;
    }
    return 0;
}

// ind_u(x) by walking powers of u.
inline u64 brute_dlog(u64 x, u64 u, u64 q) {
    u64 y = 1;
    for (u64 e = 0; e + 1 < q; ++e) {
        if (y == x % q) return e;
        y = y * u % q;
    }
    return ~u64{0};
}

// S_k(p) = sum_{a<p} a^k = p B_k (mod p^2) for even k in [2, p-3].
inline u64 bernoulli_mod_p(u64 p, u64 k) {
    const u64 p2 = p * p;
    u64 s = 0;
    for (u64 a = 1; a < p; ++a) s = (s + slow_pow(a, k, p2)) % p2;
    return s / p;  // s is divisible by p
}

// Roots of Phi_p modulo m by exhaustive search.
inline std::vector<u64> phi_roots_mod(u64 p, u64 m) {
    std::vector<u64> out;
    for (u64 x = 0; x < m; ++x) {
        u64 s = 0, w = 1;
        for (u64 i = 0; i < p; ++i) {
            s = (s + w) % m;
            w = static_cast<u64>((unsigned __int128)w * x % m);
        }
        if (s == 0) out.push_back(x);
    }
    return out;
}

inline cplx root_of_unity(u64 n, i64 k) {
    const long double a = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n);
    return {std::cos(a), std::sin(a)};
}

// zeta_p -> e^(2 pi i s / p)
inline cplx embed(const stickel::CycInt& a, u64 s) {
    cplx z = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) z += static_cast<long double>(a[i].get_d()) * root_of_unity(a.p(), static_cast<i64>(i * s));
    return z;
}

inline cplx embed(const stickel::BiCycInt& a, u64 s, u64 t) {
    cplx z = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            z += static_cast<long double>(a.at(i, j).get_d()) * root_of_unity(a.p(), static_cast<i64>(i * s)) * root_of_unity(a.q(), static_cast<i64>(j * t));
        }
    }
    return z;
}

inline long double numeric_norm(const stickel::CycInt& a) {
    cplx z = 1;
    for (u64 s = 1; s < a.p(); ++s) z *= embed(a, s);
    return z.real();
}

// sum_{x=1}^{q-1} e^(-2 pi i ind_u(x)/p) e^(2 pi i x/q), u the smallest primitive root mod q.
inline cplx gauss_sum_f1(u64 p, u64 q) {
    const u64 u = brute_primitive_root(q);
    cplx z = 0;
    for (u64 x = 1; x < q; ++x) z += root_of_unity(p, -static_cast<i64>(brute_dlog(x, u, q) % p)) * root_of_unity(q, static_cast<i64>(x));
    return z;
}

inline unsigned vp(mpz_class n, u64 p) {
    unsigned k = 0;
    if (n == 0) return ~0u;
    while (n % static_cast<unsigned long>(p) == 0) {
        n /= static_cast<unsigned long>(p);
        ++k;
    }
    return k;
}

inline stickel::CycInt random_cyc(u64 p, std::mt19937_64& rng, int range = 5) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<mpz_class> c(p - 1);
    for (auto& x : c) x = d(rng);
    return stickel::CycInt(p, std::move(c));
}

inline stickel::BiCycInt random_bicyc(u64 p, u64 q, std::mt19937_64& rng, int range = 5) {
    std::uniform_int_distribution<int> d(-range, range);
    stickel::BiCycInt a(p, q);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = d(rng);
    return a;
}

}  // namespace oracle
