#include "stickel/arith.hpp"

#include <algorithm>
#include <string>

#include "stickel/errors.hpp"

namespace stickel {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        const i64 quotient = r / new_r;
        t -= quotient * new_t;
        std::swap(t, new_t);
        r -= quotient * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw invalid_input("inv_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return reduce_mod(t, m);
}

u64 reduce_mod(i64 a, u64 m) {
    const i64 mm = static_cast<i64>(m);
    i64 r = a % mm;
    if (r < 0) r += mm;
    return static_cast<u64>(r);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> factors;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        factors.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

u64 multiplicative_order(u64 a, u64 n) {
    if (a % n == 0) throw invalid_input("multiplicative_order: element is zero mod n");
    u64 order = n - 1;
    for (u64 ell : prime_factors(n - 1)) {
        while (order % ell == 0 && pow_mod(a, order / ell, n) == 1) order /= ell;
    }
    return order;
}

bool is_primitive_root(u64 v, u64 p) {
    if (v % p == 0) return false;
    for (u64 ell : prime_factors(p - 1)) {
        if (pow_mod(v, (p - 1) / ell, p) == 1) return false;
    }
    return true;
}

u64 primitive_root(u64 p) {
    if (p < 3 || !is_prime(p)) throw invalid_input("primitive_root: " + std::to_string(p) + " is not an odd prime");
    for (u64 v = 2; v < p; ++v) {
        if (is_primitive_root(v, p)) return v;
    }
    throw invariant_violation("primitive_root: none found");
}

u64 canon_power(i64 v, i64 k, u64 p) {
    const u64 base = reduce_mod(v, p);
    if (base == 0) throw invalid_input("canon_power: p divides v");
    if (k >= 0) return pow_mod(base, static_cast<u64>(k), p);
    return pow_mod(inv_mod(base, p), static_cast<u64>(-k), p);
}

std::vector<u64> dlog_table(u64 v, u64 p) {
    std::vector<u64> dlog(p, 0);
    u64 x = 1;
    for (u64 i = 0; i + 1 < p; ++i) {
        dlog[x] = i;
        x = mul_mod(x, v, p);
    }
    return dlog;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, u64 q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
    trim(a);
    return a;
}

// a mod h, h monic.
Poly poly_rem(Poly a, const Poly& h, u64 q) {
    trim(a);
    const std::size_t d = h.size() - 1;
    while (a.size() > d) {
        const u64 lead = a.back();
        const std::size_t shift = a.size() - 1 - d;
        for (std::size_t i = 0; i <= d; ++i) {
            a[shift + i] = (a[shift + i] + q - mul_mod(lead, h[i], q)) % q;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& h, u64 q) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], q)) % q;
        }
    }
    return poly_rem(std::move(prod), h, q);
}

Poly poly_powmod(Poly base, u64 e, const Poly& h, u64 q) {
    Poly result{1};
    base = poly_rem(std::move(base), h, q);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, h, q);
        base = poly_mulmod(base, base, h, q);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a mod b
        const u64 inv = inv_mod(b.back(), q);
        for (auto& c : b) c = mul_mod(c, inv, q);
        a = poly_rem(std::move(a), b, q);
        std::swap(a, b);
    }
    return a;
}

FFElem elem_from_poly(Poly a, unsigned f) {
    a.resize(f, 0);
    return FFElem{std::move(a)};
}

Poly poly_from_elem(const FFElem& x) {
    Poly a = x.coeffs;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<u64>& poly, u64 q) {
    Poly h = poly;
    trim(h);
    if (h.size() < 2 || h.back() != 1) return false;
    const u64 f = h.size() - 1;
    if (f == 1) return true;
    const Poly x{0, 1};
    // frob[k] = x^(q^k) mod h
    std::vector<Poly> frob{x};
    for (u64 k = 1; k <= f; ++k) frob.push_back(poly_powmod(frob.back(), q, h, q));
    if (poly_sub(frob[f], x, q) != Poly{}) return false;
    for (u64 r : prime_factors(f)) {
        const Poly g = poly_gcd(h, poly_sub(frob[f / r], x, q), q);
        if (g.size() != 1) return false;
    }
    return true;
}

bool FFElem::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](u64 c) { return c == 0; });
}

namespace ff {

FFElem zero(const FieldDesc& fd) { return FFElem{std::vector<u64>(fd.f, 0)}; }

FFElem one(const FieldDesc& fd) { return from_int(fd, 1); }

FFElem from_int(const FieldDesc& fd, u64 a) {
    FFElem x = zero(fd);
    x.coeffs[0] = a % fd.q;
    return x;
}

FFElem from_index(const FieldDesc& fd, u64 index) {
    FFElem x = zero(fd);
    for (unsigned i = 0; i < fd.f; ++i) {
        x.coeffs[i] = index % fd.q;
        index /= fd.q;
    }
    return x;
}

FFElem add(const FieldDesc& fd, const FFElem& a, const FFElem& b) {
    FFElem c = zero(fd);
    for (unsigned i = 0; i < fd.f; ++i) c.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % fd.q;
    return c;
}

FFElem mul(const FieldDesc& fd, const FFElem& a, const FFElem& b) {
    if (fd.f == 1) return FFElem{{mul_mod(a.coeffs[0], b.coeffs[0], fd.q)}};
    return elem_from_poly(poly_mulmod(poly_from_elem(a), poly_from_elem(b), fd.modulus_poly, fd.q), fd.f);
}

FFElem pow(const FieldDesc& fd, const FFElem& a, u64 e) {
    FFElem result = one(fd);
    FFElem base = a;
    while (e > 0) {
        if (e & 1) result = mul(fd, result, base);
        base = mul(fd, base, base);
        e >>= 1;
    }
    return result;
}

FFElem frobenius(const FieldDesc& fd, const FFElem& a) { return pow(fd, a, fd.q); }

}  // namespace ff

FieldDesc field_make(u64 p, u64 q) {
    if (p < 3 || !is_prime(p)) throw invalid_input("field_make: p = " + std::to_string(p) + " is not an odd prime");
    if (!is_prime(q)) throw invalid_input("field_make: q = " + std::to_string(q) + " is not prime");
    if (q == p) throw invalid_input("field_make: q must differ from p");

    FieldDesc fd;
    fd.p = p;
    fd.q = q;
    fd.f = static_cast<unsigned>(multiplicative_order(q % p, p));
    fd.order = 1;
    for (unsigned i = 0; i < fd.f; ++i) {
        if (fd.order > kMaxFieldOrder / q) {
            throw invalid_input("field_make: q^f exceeds the supported field size (f = " + std::to_string(fd.f) + ")");
        }
        fd.order *= q;
    }

    if (fd.f == 1) {
        fd.modulus_poly = {0, 1};
    } else {
        // Monic candidates x^f + c(x), c enumerated by base-q index.
        for (u64 index = 0;; ++index) {
            Poly h(fd.f + 1, 0);
            u64 rest = index;
            for (unsigned i = 0; i < fd.f; ++i) {
                h[i] = rest % q;
                rest /= q;
            }
            h[fd.f] = 1;
            if (h[0] != 0 && is_irreducible(h, q)) {
                fd.modulus_poly = h;
                break;
            }
        }
    }

    const u64 group_order = fd.order - 1;
    const auto ells = prime_factors(group_order);
    for (u64 index = 1; index < fd.order; ++index) {
        const FFElem cand = ff::from_index(fd, index);
        bool generates = true;
        for (u64 ell : ells) {
            if (ff::pow(fd, cand, group_order / ell) == ff::one(fd)) {
                generates = false;
                break;
            }
        }
        if (!generates) continue;
        const FFElem zeta = ff::pow(fd, cand, group_order / p);
        // Order exactly p: not 1 (p is prime).
        if (zeta == ff::one(fd)) continue;
        fd.generator = cand;
        fd.zeta_p_image = zeta;
        return fd;
    }
    throw invariant_violation("field_make: no generator of F_{q^f}^* found");
}

u64 residue_char_exponent(const FFElem& x, const FieldDesc& fd) {
    if (x.is_zero()) throw invalid_input("residue_char_exponent: character undefined at 0");
    const FFElem y = ff::pow(fd, x, (fd.order - 1) / fd.p);
    FFElem z = ff::one(fd);
    for (u64 c = 0; c < fd.p; ++c) {
        if (z == y) return c;
        z = ff::mul(fd, z, fd.zeta_p_image);
    }
    throw invariant_violation("residue_char_exponent: x^((q^f-1)/p) is not a power of zeta_p_image");
}

u64 ff_trace(const FFElem& x, const FieldDesc& fd) {
    FFElem acc = ff::zero(fd);
    FFElem conj = x;
    for (unsigned i = 0; i < fd.f; ++i) {
        acc = ff::add(fd, acc, conj);
        conj = ff::frobenius(fd, conj);
    }
    for (unsigned i = 1; i < fd.f; ++i) {
        if (acc.coeffs[i] != 0) throw invariant_violation("ff_trace: trace left the prime field");
    }
    return acc.coeffs[0];
}

}  // namespace stickel
