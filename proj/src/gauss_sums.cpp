#include "stickel/gauss_sums.hpp"

#include <algorithm>
#include <string>

#include "stickel/errors.hpp"
#include "stickel/group_ring.hpp"

namespace stickel {

bool GaussSumRecord::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.informational; });
}

void GaussSumRecord::add_check(std::string name, bool passed, std::string detail, bool informational) {
    checks.push_back(Check{std::move(name), passed, std::move(detail), informational});
}

namespace {

mpz_class ipow(u64 base, u64 exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

std::string describe(const Valuation& v) {
    if (v.infinite) return "inf";
    return (v.capped ? ">=" : "") + std::to_string(v.value);
}

// g = +-zeta^w q^(f/2) for some w.
bool is_signed_root_of_unity_times(const CycInt& g, const mpz_class& magnitude) {
    const u64 p = g.p();
    for (u64 w = 0; w < p; ++w) {
        const CycInt base = CycInt::zeta_power(p, static_cast<i64>(w)) * magnitude;
        if (g == base || g == -base) return true;
    }
    return false;
}

}  // namespace

GaussSumRecord gauss_sum(const FieldDesc& fd) {
    const u64 p = fd.p, q = fd.q;
    GaussSumRecord rec;
    rec.p = p;
    rec.q = q;
    rec.f = fd.f;
    rec.v = primitive_root(p);
    rec.u = q == 2 ? 1 : primitive_root(q);

    // x = generator^e has x^((Q-1)/p) = zeta_p_image^e, so c(x) = e mod p.
    std::vector<u64> counts(p * q, 0);
    FFElem x = ff::one(fd);
    for (u64 e = 0; e + 1 < fd.order; ++e) {
        const u64 c = e % p;
        const u64 chi_exp = (p - c) % p;  // character zeta_p^(-c)
        counts[chi_exp * q + ff_trace(x, fd)] += 1;
        x = ff::mul(fd, x, fd.generator);
    }
    std::vector<mpz_class> cyclic(p * q);
    for (std::size_t k = 0; k < counts.size(); ++k) cyclic[k] = static_cast<unsigned long>(counts[k]);
    rec.g = BiCycInt::from_cyclic(p, q, std::move(cyclic));

    const BiCycInt gg = rec.g * conjugate(rec.g);
    rec.add_check("g_times_conj_g_equals_q^f", gg == BiCycInt::from_integer(p, q, ipow(q, fd.f)));

    if (fd.f > 1) {
        const bool collapses = rec.g.in_zeta_p();
        rec.add_check("g_in_Z[zeta_p]", collapses);
        if (!collapses) throw invariant_violation("gauss_sum: f > 1 but g depends on zeta_q");
        rec.g_reduced = rec.g.to_cyc();
        rec.G = cyc_pow(*rec.g_reduced, p);
        if (fd.f % 2 == 0) {
            rec.add_check("g_equals_pm_zeta^w_q^(f/2)", is_signed_root_of_unity_times(*rec.g_reduced, ipow(q, fd.f / 2)));
        }
    } else {
        // The tau-invariant (zeta_q^0) component of g vanishes.
        rec.add_check("zeta_q^0_component_zero", rec.g.relative_trace().is_zero());
        const BiCycInt G = bicyc_pow(rec.g, p);
        if (!G.in_zeta_p()) throw invariant_violation("gauss_sum: G = g^p does not lie in Z[zeta_p]");
        rec.G = G.to_cyc();
    }
    rec.add_check("G_in_Z[zeta_p]", true);
    return rec;
}

BiCycInt resolvent_form(u64 p, u64 q, u64 rho) {
    if (!is_prime(p) || !is_prime(q) || q % p != 1) throw invalid_input("resolvent_form: requires primes with q = 1 mod p");
    const u64 u = primitive_root(q);
    const u64 u_inv = inv_mod(u, q);
    std::vector<mpz_class> cyclic(p * q);
    u64 zq = 1;  // u^{-i} mod q
    for (u64 i = 0; i + 1 < q; ++i) {
        const u64 zp = mul_mod(i % p, rho % p, p);
        cyclic[zp * q + zq] += 1;
        zq = mul_mod(zq, u_inv, q);
    }
    return BiCycInt::from_cyclic(p, q, std::move(cyclic));
}

u64 extract_rho(const BiCycInt& g) {
    const u64 p = g.p(), q = g.q();
    if (q % p != 1) throw invalid_input("extract_rho: requires q = 1 mod p");
    if (g.is_zero()) throw invalid_input("extract_rho: g must be nonzero");
    const u64 u = primitive_root(q);
    const BiCycInt twisted = bi_galois(1, static_cast<i64>(u), g);
    for (u64 rho = 0; rho < p; ++rho) {
        if (shift_zeta_p(g, static_cast<i64>(rho)) == twisted) return rho;
    }
    throw invariant_violation("extract_rho: tau(g) is not a root-of-unity multiple of g");
}

StickelbergerProfile verify_stickelberger(GaussSumRecord& rec, const FieldDesc& fd, const GaussOptions& opts) {
    const u64 p = rec.p, q = rec.q;
    StickelbergerProfile prof;
    const i64 expected_exp = static_cast<i64>(p * (p - 1) / 2);

    if (rec.f == 1) {
        const unsigned n0 = opts.ideal.initial_precision ? opts.ideal.initial_precision : static_cast<unsigned>(2 * p + 4);
        const auto roots = hensel_roots(p, q, n0);
        for (const auto& h : roots) prof.valuations.push_back(ideal_valuation(rec.G, h, opts.ideal));

        std::vector<u64> matches;
        for (u64 j = 1; j < p; ++j) {
            bool ok = true;
            for (u64 t = 1; t < p && ok; ++t) ok = prof.valuations[mul_mod(j, t, p) - 1] == t;
            if (ok) matches.push_back(j);
        }
        if (matches.size() == 1) prof.relabel = matches.front();

        // zeta_p_image = r_1^label mod q
        const u64 r1 = mpz_class(roots.front().root % static_cast<unsigned long>(q)).get_ui();
        const u64 z = fd.zeta_p_image.coeffs[0];
        u64 r = 1;
        for (u64 t = 1; t < p; ++t) {
            r = mul_mod(r, r1, q);
            if (r == z) prof.canonical_label = t;
        }

        std::string profile_text;
        for (auto v : prof.valuations) profile_text += (profile_text.empty() ? "" : ",") + std::to_string(v);
        rec.add_check("stickelberger_profile_unique_relabeling", matches.size() == 1,
                      "profile=[" + profile_text + "] relabelings=" + std::to_string(matches.size()));
        rec.add_check("relabeling_is_canonical_ideal", prof.relabel && *prof.relabel == prof.canonical_label,
                      "j=" + std::to_string(prof.relabel.value_or(0)) + " canonical=" + std::to_string(prof.canonical_label));

        prof.norm_G = norm(rec.G);
        const mpz_class expected = ipow(q, static_cast<u64>(expected_exp));
        rec.add_check("abs_norm_G_equals_q^(p(p-1)/2)", abs(prof.norm_G) == expected);
        unsigned total = 0;
        for (auto v : prof.valuations) total += v;
        rec.add_check("ideal_valuations_sum_to_v_q(norm_G)", prof.norm_G != 0 && total == int_valuation(prof.norm_G, q),
                      "sum=" + std::to_string(total));
    } else {
        const GroupRingElt s2 = polynomial_S2(p, q, rec.v);
        prof.s2_coeff_sum = s2.coeff_sum();
        prof.norm_g = norm(*rec.g_reduced);
        const mpz_class expected = ipow(q, rec.f * static_cast<u64>(prof.s2_coeff_sum));
        rec.add_check("abs_norm_g_equals_q^(f*sum(S2))", abs(prof.norm_g) == expected,
                      "sum(S2)=" + std::to_string(prof.s2_coeff_sum));
        rec.add_check("p_times_sum(S2)_equals_p(p-1)/2", static_cast<i64>(p) * prof.s2_coeff_sum == expected_exp);
    }
    rec.stickelberger = prof;
    return prof;
}

PiAdicProfile pi_adic_profile(GaussSumRecord& rec, const GaussOptions& opts) {
    const u64 p = rec.p, q = rec.q;
    PiAdicProfile prof;
    const unsigned cap = opts.lambda_cap ? opts.lambda_cap : static_cast<unsigned>(4 * p);
    prof.g_plus_1 = lambda_valuation(rec.g + BiCycInt::from_integer(p, q, 1), cap);
    prof.G_plus_1 = lambda_valuation(rec.G + CycInt::from_integer(p, 1), cap);
    prof.Gp_plus_1 = lambda_valuation(cyc_pow(rec.G, p) + CycInt::from_integer(p, 1), cap);

    rec.add_check("v_pi(g+1)>=1", !prof.g_plus_1.infinite && prof.g_plus_1.value >= 1, describe(prof.g_plus_1));

    const auto exactly = [](const Valuation& v, unsigned n) { return !v.infinite && !v.capped && v.value == n; };
    const auto at_least = [](const Valuation& v, unsigned n) { return v.infinite || v.value >= n; };

    if (q % p == 1) {
        prof.p_is_pth_power_mod_q = pow_mod(p, (q - 1) / p, q) == 1;
        if (!prof.p_is_pth_power_mod_q) {
            rec.add_check("v_pi(G+1)==p", exactly(prof.G_plus_1, static_cast<unsigned>(p)), describe(prof.G_plus_1));
            rec.add_check("v_pi(G^p+1)==2p-1", exactly(prof.Gp_plus_1, static_cast<unsigned>(2 * p - 1)), describe(prof.Gp_plus_1));
        } else {
            rec.add_check("v_pi(G+1)>=p+1", at_least(prof.G_plus_1, static_cast<unsigned>(p + 1)), describe(prof.G_plus_1));
            rec.add_check("v_pi(G^p+1)>=2p", at_least(prof.Gp_plus_1, static_cast<unsigned>(2 * p)), describe(prof.Gp_plus_1));
        }
    } else {
        // g in Z[zeta_p] and g = -1 mod lambda force one more step.
        rec.add_check("v_pi(G+1)>=p+1", at_least(prof.G_plus_1, static_cast<unsigned>(p + 1)), describe(prof.G_plus_1));
        rec.add_check("v_pi(G^p+1)>=2p", at_least(prof.Gp_plus_1, static_cast<unsigned>(2 * p)), describe(prof.Gp_plus_1));
    }
    rec.pi_adic = prof;
    return prof;
}

GaussSumRecord verify_gauss(u64 p, u64 q, const GaussOptions& opts) {
    const FieldDesc fd = field_make(p, q);
    GaussSumRecord rec = gauss_sum(fd);
    if (fd.f == 1) {
        rec.rho = extract_rho(rec.g);
        rec.add_check("g_equals_resolvent_form(rho)", rec.g == resolvent_form(p, q, *rec.rho), "rho=" + std::to_string(*rec.rho));
        // rho depends on which ideal over q fixes the character. With
        // zeta_p_image = u^((q-1)/p) it is 1; relabeling the ideal by
        // (-v)^{-1} turns it into -v. Reported, not enforced.
        const u64 minus_v = p - rec.v % p;
        rec.add_check("rho_equals_minus_v", *rec.rho == minus_v,
                      "rho=" + std::to_string(*rec.rho) + " -v=" + std::to_string(minus_v) +
                          " relabel_factor=" + std::to_string(inv_mod(minus_v, p)),
                      true);
    }
    verify_stickelberger(rec, fd, opts);
    pi_adic_profile(rec, opts);
    return rec;
}

u64 find_pth_power_prime(u64 p, u64 q_max) {
    for (u64 q = p + 1; q <= q_max; q += p) {
        if (is_prime(q) && pow_mod(p, (q - 1) / p, q) == 1) return q;
    }
    return 0;
}

}  // namespace stickel
