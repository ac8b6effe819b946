#include "stickel/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "stickel/errors.hpp"

namespace stickel {

namespace {

void require_same_p(const CycInt& a, const CycInt& b) {
    if (a.p() != b.p()) throw invalid_input("CycInt: mismatched p (" + std::to_string(a.p()) + " vs " + std::to_string(b.p()) + ")");
}

void require_same_pq(const BiCycInt& a, const BiCycInt& b) {
    if (a.p() != b.p() || a.q() != b.q()) throw invalid_input("BiCycInt: mismatched (p, q)");
}

}  // namespace

CycInt::CycInt(u64 p) : p_(p), c_(p - 1) {
    if (p < 2) throw invalid_input("CycInt: p must be prime");
}

CycInt::CycInt(u64 p, std::vector<mpz_class> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (c_.size() != p - 1) throw invalid_input("CycInt: expected p-1 coefficients");
}

CycInt CycInt::from_integer(u64 p, const mpz_class& n) {
    CycInt a(p);
    a.c_[0] = n;
    return a;
}

CycInt CycInt::zeta_power(u64 p, i64 k) {
    std::vector<mpz_class> cyclic(p);
    cyclic[reduce_mod(k, p)] = 1;
    return from_cyclic(p, std::move(cyclic));
}

CycInt CycInt::lambda(u64 p) {
    CycInt a = zeta_power(p, 1);
    a.c_[0] -= 1;
    return a;
}

CycInt CycInt::from_cyclic(u64 p, std::vector<mpz_class> cyclic) {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    const mpz_class top = cyclic[p - 1];
    cyclic.pop_back();
    if (top != 0) {
        for (auto& c : cyclic) c -= top;
    }
    return CycInt(p, std::move(cyclic));
}

bool CycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycInt::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const mpz_class& c) { return c == 0; });
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
    require_same_p(*this, rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
    require_same_p(*this, rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const mpz_class& k) {
    for (auto& c : c_) c *= k;
    return *this;
}

CycInt operator-(CycInt a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same_p(a, b);
    const u64 p = a.p_;
    std::vector<mpz_class> cyclic(p);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= p) k -= p;
            mpz_addmul(cyclic[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return CycInt::from_cyclic(p, std::move(cyclic));
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt cyc_pow(const CycInt& a, u64 e) {
    CycInt result = CycInt::from_integer(a.p(), 1);
    CycInt base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

CycInt galois_apply(i64 t, const CycInt& a) {
    const u64 p = a.p();
    const u64 tt = reduce_mod(t, p);
    if (tt == 0) throw invalid_input("galois_apply: t must be prime to p");
    std::vector<mpz_class> cyclic(p);
    for (u64 i = 0; i + 1 < p; ++i) cyclic[mul_mod(i, tt, p)] = a[i];
    return CycInt::from_cyclic(p, std::move(cyclic));
}

CycInt conjugate(const CycInt& a) { return galois_apply(static_cast<i64>(a.p()) - 1, a); }

mpz_class norm(const CycInt& a) {
    CycInt prod = a;
    for (u64 t = 2; t < a.p(); ++t) prod = prod * galois_apply(static_cast<i64>(t), a);
    if (!prod.is_rational()) throw invariant_violation("norm: product of conjugates is not rational");
    return prod[0];
}

mpz_class content(const CycInt& a) {
    mpz_class g = 0;
    for (const auto& c : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

namespace {

// prod_{k=2}^{p-1} (zeta^k - 1) = p / lambda
const CycInt& lambda_cofactor(u64 p) {
    static std::mutex mu;
    static std::map<u64, CycInt> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    CycInt prod = CycInt::from_integer(p, 1);
    for (u64 k = 2; k < p; ++k) {
        CycInt factor = CycInt::zeta_power(p, static_cast<i64>(k));
        factor[0] -= 1;
        prod = prod * factor;
    }
    return cache.emplace(p, std::move(prod)).first->second;
}

bool lambda_divides(const CycInt& a) {
    mpz_class sum = 0;
    for (const auto& c : a.coeffs()) sum += c;
    return mpz_divisible_ui_p(sum.get_mpz_t(), a.p()) != 0;
}

}  // namespace

CycInt divide_by_lambda(const CycInt& a) {
    if (!lambda_divides(a)) throw invariant_violation("divide_by_lambda: lambda does not divide the argument");
    CycInt b = a * lambda_cofactor(a.p());
    for (std::size_t i = 0; i + 1 < a.p(); ++i) {
        if (!mpz_divisible_ui_p(b[i].get_mpz_t(), a.p())) {
            throw invariant_violation("divide_by_lambda: inexact division by p");
        }
        mpz_divexact_ui(b[i].get_mpz_t(), b[i].get_mpz_t(), a.p());
    }
    return b;
}

Valuation lambda_valuation(const CycInt& a, unsigned cap) {
    if (cap == 0) cap = static_cast<unsigned>(4 * a.p());
    if (a.is_zero()) return Valuation{0, true, false};
    Valuation v;
    CycInt cur = a;
    // Whole factors of p = unit * lambda^(p-1) are stripped without division.
    while (v.value + (a.p() - 1) <= cap && mpz_divisible_ui_p(content(cur).get_mpz_t(), a.p())) {
        for (std::size_t i = 0; i + 1 < a.p(); ++i) mpz_divexact_ui(cur[i].get_mpz_t(), cur[i].get_mpz_t(), a.p());
        v.value += static_cast<unsigned>(a.p() - 1);
    }
    while (lambda_divides(cur)) {
        if (v.value >= cap) {
            v.capped = true;
            return v;
        }
        cur = divide_by_lambda(cur);
        ++v.value;
    }
    return v;
}

// ---------------------------------------------------------------------------

BiCycInt::BiCycInt(u64 p, u64 q) : p_(p), q_(q), c_((p - 1) * (q - 1)) {
    if (p < 2 || q < 2) throw invalid_input("BiCycInt: p and q must be primes");
}

BiCycInt BiCycInt::from_cyc(const CycInt& a, u64 q) {
    BiCycInt b(a.p(), q);
    for (std::size_t i = 0; i < b.rows(); ++i) b.at(i, 0) = a[i];
    return b;
}

BiCycInt BiCycInt::monomial(u64 p, u64 q, i64 i, i64 j) {
    std::vector<mpz_class> cyclic(p * q);
    cyclic[reduce_mod(i, p) * q + reduce_mod(j, q)] = 1;
    return from_cyclic(p, q, std::move(cyclic));
}

BiCycInt BiCycInt::from_integer(u64 p, u64 q, const mpz_class& n) {
    BiCycInt b(p, q);
    b.at(0, 0) = n;
    return b;
}

BiCycInt BiCycInt::from_cyclic(u64 p, u64 q, std::vector<mpz_class> cyclic) {
    // zeta_q^(q-1) folded within each row, then zeta_p^(p-1) across rows.
    for (u64 i = 0; i < p; ++i) {
        mpz_class* row = &cyclic[i * q];
        const mpz_class top = row[q - 1];
        if (top == 0) continue;
        for (u64 j = 0; j + 1 < q; ++j) row[j] -= top;
    }
    const mpz_class* last = &cyclic[(p - 1) * q];
    for (u64 i = 0; i + 1 < p; ++i) {
        for (u64 j = 0; j + 1 < q; ++j) {
            if (last[j] != 0) cyclic[i * q + j] -= last[j];
        }
    }
    BiCycInt b(p, q);
    for (u64 i = 0; i + 1 < p; ++i) {
        for (u64 j = 0; j + 1 < q; ++j) b.at(i, j) = std::move(cyclic[i * q + j]);
    }
    return b;
}

bool BiCycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& c) { return c == 0; });
}

CycInt BiCycInt::slice(std::size_t j) const {
    CycInt a(p_);
    for (std::size_t i = 0; i < rows(); ++i) a[i] = at(i, j);
    return a;
}

bool BiCycInt::in_zeta_p() const {
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 1; j < cols(); ++j) {
            if (at(i, j) != 0) return false;
        }
    }
    return true;
}

CycInt BiCycInt::to_cyc() const {
    if (!in_zeta_p()) throw invariant_violation("BiCycInt::to_cyc: element depends on zeta_q");
    return slice(0);
}

CycInt BiCycInt::relative_trace() const {
    // Tr(zeta_q^0) = q - 1, Tr(zeta_q^j) = -1 otherwise.
    CycInt tr(p_);
    const mpz_class qm1 = static_cast<unsigned long>(q_ - 1);
    for (std::size_t i = 0; i < rows(); ++i) {
        mpz_class acc = at(i, 0) * qm1;
        for (std::size_t j = 1; j < cols(); ++j) acc -= at(i, j);
        tr[i] = acc;
    }
    return tr;
}

BiCycInt& BiCycInt::operator+=(const BiCycInt& rhs) {
    require_same_pq(*this, rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

BiCycInt& BiCycInt::operator-=(const BiCycInt& rhs) {
    require_same_pq(*this, rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

bool operator==(const BiCycInt& a, const BiCycInt& b) { return a.p_ == b.p_ && a.q_ == b.q_ && a.c_ == b.c_; }

BiCycInt operator*(const BiCycInt& a, const BiCycInt& b) { return bicyc_mul(a, b); }

namespace {

// Accumulates row r of the cyclic product: sum_i a_row(i) * b_row(r - i).
void accumulate_row(const BiCycInt& a, const BiCycInt& b, u64 r, mpz_class* out) {
    const u64 p = a.p(), q = a.q();
    for (u64 i = 0; i + 1 < p; ++i) {
        const u64 k = (r + p - i) % p;
        if (k == p - 1) continue;  // b has no row p-1
        for (u64 j = 0; j + 1 < q; ++j) {
            const mpz_class& x = a.at(i, j);
            if (x == 0) continue;
            for (u64 l = 0; l + 1 < q; ++l) {
                const mpz_class& y = b.at(k, l);
                if (y == 0) continue;
                u64 col = j + l;
                if (col >= q) col -= q;
                mpz_addmul(out[col].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            }
        }
    }
}

}  // namespace

BiCycInt bicyc_mul(const BiCycInt& a, const BiCycInt& b) {
    require_same_pq(a, b);
    const u64 p = a.p(), q = a.q();
    std::vector<mpz_class> cyclic(p * q);
    const i64 rows = static_cast<i64>(p);
#pragma omp parallel for schedule(dynamic)
    for (i64 r = 0; r < rows; ++r) accumulate_row(a, b, static_cast<u64>(r), &cyclic[static_cast<u64>(r) * q]);
    return BiCycInt::from_cyclic(p, q, std::move(cyclic));
}

namespace reference {

BiCycInt bicyc_mul(const BiCycInt& a, const BiCycInt& b) {
    require_same_pq(a, b);
    const u64 p = a.p(), q = a.q();
    std::vector<mpz_class> cyclic(p * q);
    for (u64 i = 0; i + 1 < p; ++i) {
        for (u64 j = 0; j + 1 < q; ++j) {
            if (a.at(i, j) == 0) continue;
            for (u64 k = 0; k + 1 < p; ++k) {
                for (u64 l = 0; l + 1 < q; ++l) {
                    const u64 r = (i + k) % p, c = (j + l) % q;
                    cyclic[r * q + c] += a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return BiCycInt::from_cyclic(p, q, std::move(cyclic));
}

}  // namespace reference

BiCycInt bicyc_pow(const BiCycInt& a, u64 e) {
    BiCycInt result = BiCycInt::from_integer(a.p(), a.q(), 1);
    BiCycInt base = a;
    while (e > 0) {
        if (e & 1) result = bicyc_mul(result, base);
        e >>= 1;
        if (e > 0) base = bicyc_mul(base, base);
    }
    return result;
}

BiCycInt bi_galois(i64 s, i64 t, const BiCycInt& a) {
    const u64 p = a.p(), q = a.q();
    const u64 ss = reduce_mod(s, p), tt = reduce_mod(t, q);
    if (ss == 0 || tt == 0) throw invalid_input("bi_galois: exponents must be units");
    std::vector<mpz_class> cyclic(p * q);
    for (u64 i = 0; i + 1 < p; ++i) {
        for (u64 j = 0; j + 1 < q; ++j) cyclic[mul_mod(i, ss, p) * q + mul_mod(j, tt, q)] = a.at(i, j);
    }
    return BiCycInt::from_cyclic(p, q, std::move(cyclic));
}

BiCycInt shift_zeta_p(const BiCycInt& a, i64 k) {
    const u64 p = a.p(), q = a.q();
    const u64 kk = reduce_mod(k, p);
    std::vector<mpz_class> cyclic(p * q);
    for (u64 i = 0; i + 1 < p; ++i) {
        const u64 r = (i + kk) % p;
        for (u64 j = 0; j + 1 < q; ++j) cyclic[r * q + j] = a.at(i, j);
    }
    return BiCycInt::from_cyclic(p, q, std::move(cyclic));
}

BiCycInt conjugate(const BiCycInt& a) {
    return bi_galois(static_cast<i64>(a.p()) - 1, static_cast<i64>(a.q()) - 1, a);
}

Valuation lambda_valuation(const BiCycInt& a, unsigned cap) {
    if (cap == 0) cap = static_cast<unsigned>(4 * a.p());
    if (a.is_zero()) return Valuation{0, true, false};
    Valuation best{cap, false, true};
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const Valuation v = lambda_valuation(a.slice(j), cap);
        if (v.infinite) continue;
        if (v.value < best.value || (v.value == best.value && !v.capped)) best = v;
    }
    return best;
}

// ---------------------------------------------------------------------------

namespace {

mpz_class phi_eval(u64 p, const mpz_class& x, const mpz_class& mod) {
    mpz_class acc = 0;
    for (u64 i = 0; i < p; ++i) {
        acc = acc * x + 1;
        acc %= mod;
    }
    return acc;
}

mpz_class phi_derivative_eval(u64 p, const mpz_class& x, const mpz_class& mod) {
    // d/dx sum_{i=0}^{p-1} x^i = sum_{i=1}^{p-1} i x^(i-1)
    mpz_class acc = 0;
    for (u64 i = p - 1; i >= 1; --i) {
        acc = acc * x + static_cast<unsigned long>(i);
        acc %= mod;
    }
    return acc;
}

mpz_class newton_lift(u64 p, u64 q, mpz_class root, unsigned from, unsigned to) {
    unsigned prec = from;
    while (prec < to) {
        prec = std::min(2 * prec, to);
        mpz_class mod;
        mpz_ui_pow_ui(mod.get_mpz_t(), q, prec);
        const mpz_class value = phi_eval(p, root, mod);
        mpz_class deriv = phi_derivative_eval(p, root, mod);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), mod.get_mpz_t()) == 0) {
            throw invariant_violation("hensel: root is not simple");
        }
        root = (root - value * inv) % mod;
        if (root < 0) root += mod;
    }
    return root;
}

}  // namespace

std::vector<HenselRoot> hensel_roots(u64 p, u64 q, unsigned precision) {
    if (p < 3 || !is_prime(p) || !is_prime(q) || q == p) throw invalid_input("hensel_roots: p, q must be distinct primes, p odd");
    if (q % p != 1) throw invalid_input("hensel_roots: q must be 1 mod p for degree-1 splitting");
    if (precision == 0) throw invalid_input("hensel_roots: precision must be positive");

    // Roots of Phi_p mod q: elements of exact order p.
    std::vector<u64> roots;
    for (u64 x = 2; x < q; ++x) {
        if (pow_mod(x, p, q) == 1) roots.push_back(x);
    }
    if (roots.size() != p - 1) throw invariant_violation("hensel_roots: Phi_p does not split into p-1 roots mod q");
    const u64 r1 = roots.front();

    std::vector<HenselRoot> out;
    out.reserve(p - 1);
    u64 r = 1;
    for (u64 t = 1; t < p; ++t) {
        r = mul_mod(r, r1, q);
        HenselRoot h;
        h.p = p;
        h.q = q;
        h.precision = precision;
        mpz_ui_pow_ui(h.modulus.get_mpz_t(), q, precision);
        h.root = newton_lift(p, q, mpz_class(static_cast<unsigned long>(r)), 1, precision);
        h.label = t;
        out.push_back(std::move(h));
    }
    return out;
}

HenselRoot relift(const HenselRoot& h, unsigned precision) {
    HenselRoot out = h;
    const unsigned from = std::min(h.precision, precision);
    mpz_class start = h.root;
    if (precision < h.precision) {
        mpz_class mod;
        mpz_ui_pow_ui(mod.get_mpz_t(), h.q, precision);
        start %= mod;
    }
    out.precision = precision;
    mpz_ui_pow_ui(out.modulus.get_mpz_t(), h.q, precision);
    out.root = newton_lift(h.p, h.q, start, from, precision);
    return out;
}

unsigned int_valuation(const mpz_class& n, u64 q) {
    if (n == 0) throw invalid_input("int_valuation: zero has infinite valuation");
    mpz_class m = abs(n);
    unsigned v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
        ++v;
    }
    return v;
}

unsigned ideal_valuation(const CycInt& a, const HenselRoot& h, IdealValuationOptions opts) {
    if (a.is_zero()) throw invalid_input("ideal_valuation: zero has infinite valuation");
    if (a.p() != h.p) throw invalid_input("ideal_valuation: mismatched p");
    const unsigned start = opts.initial_precision ? opts.initial_precision : static_cast<unsigned>(2 * h.p + 4);
    const unsigned cap = opts.max_precision ? opts.max_precision : static_cast<unsigned>(16 * h.p);

    const unsigned e = int_valuation(content(a), h.q);
    CycInt b = a;
    if (e > 0) {
        mpz_class qe;
        mpz_ui_pow_ui(qe.get_mpz_t(), h.q, e);
        for (std::size_t i = 0; i + 1 < b.p(); ++i) mpz_divexact(b[i].get_mpz_t(), b[i].get_mpz_t(), qe.get_mpz_t());
    }

    HenselRoot cur = relift(h, start);
    for (;;) {
        mpz_class value = 0;
        for (std::size_t i = b.p() - 1; i-- > 0;) {
            value = (value * cur.root + b[i]) % cur.modulus;
        }
        if (value < 0) value += cur.modulus;
        if (value != 0) {
            const unsigned v = int_valuation(value, h.q);
            if (v + 1 < cur.precision) return v + e;
        }
        if (cur.precision >= cap) {
            throw precision_exhausted("ideal_valuation: precision cap " + std::to_string(cap) + " reached");
        }
        cur = relift(cur, std::min(2 * cur.precision, cap));
    }
}

}  // namespace stickel
