#include "stickel/regularity.hpp"

#include <omp.h>

#include <string>

#include "stickel/errors.hpp"
#include "stickel/group_ring.hpp"

namespace stickel {

void BernoulliTable::extend(std::size_t n) {
    if (b_.empty()) b_.emplace_back(1);
    for (std::size_t k = b_.size(); k <= n; ++k) {
        if (k > 1 && k % 2 == 1) {
            b_.emplace_back(0);
            continue;
        }
        mpz_class c = 1;  // C(k+1, 0)
        mpq_class acc = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (b_[j] != 0) acc += mpq_class(c) * b_[j];
            c = c * static_cast<unsigned long>(k + 1 - j) / static_cast<unsigned long>(j + 1);
        }
        mpq_class bk = -acc / mpq_class(static_cast<unsigned long>(k + 1));
        bk.canonicalize();
        b_.push_back(bk);
    }
}

namespace {

void require_odd_prime(u64 p, const char* who) {
    if (p < 3 || !is_prime(p)) throw invalid_input(std::string(who) + ": p = " + std::to_string(p) + " is not an odd prime");
}

u64 reduce_rational(const mpq_class& x, u64 p) {
    const u64 num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
    const u64 den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
    if (den == 0) throw invalid_input("bernoulli_mod_p: denominator divisible by p");
    return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

u64 bernoulli_mod_p(u64 p, u64 k, const BernoulliTable& table) {
    require_odd_prime(p, "bernoulli_mod_p");
    if (k == 0 || k % 2 == 1) throw invalid_input("bernoulli_mod_p: k must be even and positive");
    if (k % (p - 1) == 0) throw invalid_input("bernoulli_mod_p: k = 0 mod p-1, p divides the denominator of B_k");
    if (k >= table.size()) throw invalid_input("bernoulli_mod_p: table too short");
    return reduce_rational(table[k], p);
}

u64 bernoulli_mod_p(u64 p, u64 k) { return bernoulli_mod_p(p, k, BernoulliTable(k)); }

std::map<u64, u64> bernoulli_table_mod_p(u64 p, const BernoulliTable& table) {
    require_odd_prime(p, "bernoulli_table_mod_p");
    std::map<u64, u64> out;
    for (u64 k = 2; k + 3 <= p; k += 2) out[k] = bernoulli_mod_p(p, k, table);
    return out;
}

std::map<u64, u64> bernoulli_table_mod_p(u64 p) { return bernoulli_table_mod_p(p, BernoulliTable(p)); }

RegularityVerdict q_root_scan(u64 p, u64 v, const BernoulliTable& table) {
    require_odd_prime(p, "q_root_scan");
    const GroupRingElt Q = polynomial_Q(p, v);
    RegularityVerdict r;
    r.p = p;
    r.v = v;
    for (u64 n = 2; n + 2 <= p; ++n) {
        if (fp_gr_eval(Q, pow_mod(v, n, p)) != 0) continue;
        r.all_roots.push_back(n);
        if (n % 2 == 1) r.odd_roots.push_back((n - 1) / 2);
    }
    for (const auto& [k, b] : bernoulli_table_mod_p(p, table)) {
        if (b == 0) r.irregular_indices.push_back(k);
    }
    r.irregular = !r.irregular_indices.empty();
    r.agreement = r.odd_roots.size() == r.irregular_indices.size();
    return r;
}

RegularityVerdict q_root_scan(u64 p, u64 v) { return q_root_scan(p, v, BernoulliTable(p)); }

std::vector<RegularityVerdict> scan_irregular(u64 pmax, int jobs) {
    std::vector<u64> odd;
    for (u64 p : primes_up_to(pmax)) {
        if (p > 2) odd.push_back(p);
    }
    const BernoulliTable table(pmax);
    std::vector<RegularityVerdict> out(odd.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    // The table is only read here; each slot is written by one thread.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < odd.size(); ++i) {
        const std::size_t j = odd.size() - 1 - i;  // big primes first
        out[j] = q_root_scan(odd[j], primitive_root(odd[j]), table);
    }
    return out;
}

namespace reference {
std::vector<RegularityVerdict> scan_irregular(u64 pmax) {
    std::vector<RegularityVerdict> out;
    const BernoulliTable table(pmax);
    for (u64 p : primes_up_to(pmax)) {
        if (p > 2) out.push_back(q_root_scan(p, primitive_root(p), table));
    }
    return out;
}
}  // namespace reference

BHalfCheck b_half_check(u64 p, u64 v) {
    require_primitive_root(p, v);
    if (p % 4 != 3) throw invalid_input("b_half_check: requires p = 3 mod 4");
    BHalfCheck r;
    r.p = p;
    r.v = v % p;
    const auto delta = delta_coeffs(p, v);
    i64 alt = 0;
    for (std::size_t i = 0; i < delta.size(); ++i) alt += (i % 2 == 0 ? 1 : -1) * delta[i];
    r.q_at_minus_one = reduce_mod(alt, p);
    for (u64 i = 0; i + 1 < p; ++i) {
        const unsigned long w = canon_power(static_cast<i64>(v), -static_cast<i64>(i), p);
        (i % 2 == 0 ? r.s1 : r.s2) += w;
    }
    r.V = r.s2 - r.s1;
    const mpz_class total = mpz_class(static_cast<unsigned long>(p)) * (p - 1) / 2;
    const GroupRingElt Q = polynomial_Q(p, v);
    r.identities = r.s1 + r.s2 == total && mpz_class(static_cast<long>(p)) * alt == r.V * (1 + static_cast<long>(r.v)) &&
                   r.V != 0 && abs(r.V) < total && fp_gr_eval(Q, pow_mod(v, (p - 1) / 2, p)) == r.q_at_minus_one;
    r.nonzero = r.q_at_minus_one != 0;
    return r;
}

}  // namespace stickel
