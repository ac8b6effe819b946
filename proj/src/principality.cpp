#include "stickel/principality.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "stickel/cyclotomic.hpp"
#include "stickel/errors.hpp"
#include "stickel/group_ring.hpp"

namespace stickel {

PrincipalityReport principality_test(u64 p, u64 q, u64 v) {
    require_primitive_root(p, v);
    if (!is_prime(q) || q == p) throw invalid_input("principality_test: q must be a prime different from p");
    PrincipalityReport r;
    r.p = p;
    r.q = q;
    r.v = v % p;
    r.f = multiplicative_order(q % p, p);
    if (r.f == 1) throw invalid_input("principality_test: f = 1 (q = 1 mod p), the S2 test is undefined");
    r.m = (p - 1) / r.f;
    const GroupRingElt s2 = polynomial_S2(p, q, v);
    r.s2.assign(s2.coeffs().begin(), s2.coeffs().begin() + static_cast<std::ptrdiff_t>(r.m));

    for (u64 l = 1; l < r.m; ++l) {
        const u64 step = pow_mod(v, l * r.f, p);
        u64 acc = 0, w = 1;
        for (u64 i = 0; i < r.m; ++i) {
            acc = (acc + mul_mod(reduce_mod(r.s2[i], p), w, p)) % p;
            w = mul_mod(w, step, p);
        }
        r.sigma_values.push_back(acc);
    }
    for (u64 k = 0; k + 1 < p; ++k) r.full_orbit_sum += canon_power(static_cast<i64>(v), -static_cast<i64>(k), p);
    i64 s2_total = 0;
    for (i64 c : r.s2) s2_total += c;
    r.full_orbit_identity = r.full_orbit_sum == mpz_class(static_cast<unsigned long>(p * (p - 1) / 2)) &&
                            s2_total * static_cast<i64>(p) == static_cast<i64>(p * (p - 1) / 2);
    r.p_principal = std::all_of(r.sigma_values.begin(), r.sigma_values.end(), [](u64 s) { return s != 0; });
    return r;
}

HalfDegreeCorollary half_degree_corollary(u64 p, u64 v) {
    require_primitive_root(p, v);
    if (p % 4 != 3) throw invalid_input("half_degree_corollary: requires p = 3 mod 4");
    if (p == 3) throw invalid_input("half_degree_corollary: p = 3 gives f = 1");
    HalfDegreeCorollary r;
    r.p = p;
    r.v = v % p;
    for (u64 j = 0; 2 * j + 3 <= p; ++j) {
        r.even_sum += canon_power(static_cast<i64>(v), -static_cast<i64>(2 * j), p);
        r.odd_sum += canon_power(static_cast<i64>(v), -static_cast<i64>(2 * j + 1), p);
    }
    const mpz_class pz = static_cast<unsigned long>(p);
    if (r.even_sum % pz != 0 || r.odd_sum % pz != 0) throw invariant_violation("half_degree_corollary: orbit sum not divisible by p");
    r.sigma = r.even_sum / pz - r.odd_sum / pz;
    mpz_class s = r.sigma % pz;
    if (s < 0) s += pz;
    r.sigma_mod_p = s.get_ui();
    const mpz_class total = r.even_sum + r.odd_sum;
    r.total_is_odd = total == pz * (p - 1) / 2 && mpz_odd_p(total.get_mpz_t());
    r.p_principal = r.sigma_mod_p != 0;
    return r;
}

std::size_t ProbeReport::counterexamples() const {
    return static_cast<std::size_t>(std::count_if(witnesses.begin(), witnesses.end(), [](const ProbeWitness& w) { return !w.holds; }));
}

namespace {

// Appends all vectors with the given L1 norm, lexicographically, stopping at count.
void vectors_of_norm(std::size_t n, int r, int norm, std::size_t count, std::vector<i64>& cur,
                     std::vector<std::vector<i64>>& out) {
    if (out.size() >= count) return;
    const std::size_t pos = cur.size();
    if (pos == n) {
        if (norm == 0) out.push_back(cur);
        return;
    }
    // Remaining coordinates can absorb at most r each.
    const int rest = static_cast<int>(n - pos - 1) * r;
    for (int c = -r; c <= r; ++c) {
        const int left = norm - std::abs(c);
        if (left < 0 || left > rest) continue;
        cur.push_back(c);
        vectors_of_norm(n, r, left, count, cur, out);
        cur.pop_back();
    }
}

struct Candidate {
    u64 a;
    const std::vector<i64>* x;
};

std::optional<ProbeWitness> examine(u64 p, const CycInt& lam_p1, std::size_t index, const Candidate& c) {
    std::vector<mpz_class> coeffs(p - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = static_cast<long>((*c.x)[i]);
    const CycInt q1 = CycInt::from_integer(p, static_cast<unsigned long>(c.a)) + cyc_mul(lam_p1, CycInt(p, std::move(coeffs)));
    const mpz_class n = abs(norm(q1));
    if (n < 2) return std::nullopt;
    ProbeWitness w;
    if (n.fits_ulong_p()) {
        if (!is_prime(n.get_ui())) return std::nullopt;
    } else {
        if (mpz_probab_prime_p(n.get_mpz_t(), kProbePrimalityReps) == 0) return std::nullopt;
        w.probabilistic = true;
    }
    w.index = index;
    w.a = c.a;
    w.x = *c.x;
    w.q = n;
    const mpz_class pz = static_cast<unsigned long>(p);
    if ((n - 1) % pz != 0) {
        w.residue = 0;
        w.holds = false;
        return w;
    }
    const mpz_class e = (n - 1) / pz;
    mpz_powm(w.residue.get_mpz_t(), pz.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    w.holds = w.residue == 1;
    return w;
}

struct ProbePlan {
    std::vector<std::vector<i64>> xs;
    std::vector<Candidate> candidates;
    CycInt lam_p1;
};

ProbePlan plan_probe(u64 p, const ProbeOptions& opts, ProbeReport& rep) {
    if (p < 3 || !is_prime(p)) throw invalid_input("principal_norm_probe: p = " + std::to_string(p) + " is not an odd prime");
    if (opts.bound == 0) throw invalid_input("principal_norm_probe: bound must be positive");
    if (opts.coeff_bound < 0) throw invalid_input("principal_norm_probe: coefficient bound must be nonnegative");
    rep.p = p;
    rep.options = opts;
    ProbePlan plan;
    const std::size_t per_x = p - 1;
    plan.xs = graded_lex_vectors(p - 1, opts.coeff_bound, (opts.bound + per_x - 1) / per_x);
    for (const auto& x : plan.xs) {
        for (u64 a = 1; a < p && plan.candidates.size() < opts.bound; ++a) plan.candidates.push_back({a, &x});
    }
    rep.examined = plan.candidates.size();
    rep.exhausted = plan.candidates.size() < opts.bound;
    plan.lam_p1 = cyc_pow(CycInt::lambda(p), p + 1);
    return plan;
}

}  // namespace

std::vector<std::vector<i64>> graded_lex_vectors(std::size_t n, int r, std::size_t count) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur;
    const int max_norm = static_cast<int>(n) * r;
    for (int norm = 0; norm <= max_norm && out.size() < count; ++norm) vectors_of_norm(n, r, norm, count, cur, out);
    return out;
}

ProbeReport principal_norm_probe(u64 p, const ProbeOptions& opts) {
    ProbeReport rep;
    const ProbePlan plan = plan_probe(p, opts, rep);
    const std::size_t n = plan.candidates.size();
    std::vector<std::optional<ProbeWitness>> slots(n);
    const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        const std::size_t stride = static_cast<std::size_t>(omp_get_num_threads());
        for (std::size_t i = static_cast<std::size_t>(omp_get_thread_num()); i < n; i += stride) {
            slots[i] = examine(p, plan.lam_p1, i, plan.candidates[i]);
        }
    }
    for (auto& s : slots) {
        if (s) rep.witnesses.push_back(std::move(*s));
    }
    return rep;
}

namespace reference {
ProbeReport principal_norm_probe(u64 p, const ProbeOptions& opts) {
    ProbeReport rep;
    const ProbePlan plan = plan_probe(p, opts, rep);
    for (std::size_t i = 0; i < plan.candidates.size(); ++i) {
        if (auto w = examine(p, plan.lam_p1, i, plan.candidates[i])) rep.witnesses.push_back(std::move(*w));
    }
    return rep;
}
}  // namespace reference

}  // namespace stickel
