#pragma once

// Gauss sums g(q) of the p-th power residue character, their p-th powers
// G(q) = g(q)^p, and the machine checks of their structure: norms,
// Stickelberger valuation profiles, twist exponents and pi-adic sharpness.

#include <optional>
#include <string>
#include <vector>

#include "stickel/arith.hpp"
#include "stickel/cyclotomic.hpp"

namespace stickel {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    bool informational = false;  // reported, never counted as a failure
};

struct StickelbergerProfile {
    // f = 1: valuation of G at the ideal (q, zeta - r_1^t), index t-1.
    std::vector<unsigned> valuations;
    std::optional<u64> relabel;   // the unique j with valuations[j t mod p] = t
    u64 canonical_label = 0;      // label of the ideal selected by zeta_p_image
    mpz_class norm_G;
    // f > 1
    mpz_class norm_g;
    i64 s2_coeff_sum = 0;
};

struct PiAdicProfile {
    Valuation g_plus_1;
    Valuation G_plus_1;
    Valuation Gp_plus_1;
    bool p_is_pth_power_mod_q = false;  // p^((q-1)/p) = 1 mod q
};

struct GaussSumRecord {
    u64 p = 0;
    u64 q = 0;
    unsigned f = 0;
    u64 v = 0;  // smallest primitive root mod p
    u64 u = 0;  // smallest primitive root mod q (q odd)
    BiCycInt g;
    std::optional<CycInt> g_reduced;  // f > 1: g as an element of Z[zeta_p]
    CycInt G;
    std::optional<u64> rho;
    std::optional<StickelbergerProfile> stickelberger;
    std::optional<PiAdicProfile> pi_adic;
    std::vector<Check> checks;

    bool all_passed() const;
    void add_check(std::string name, bool passed, std::string detail = {}, bool informational = false);
};

struct GaussOptions {
    IdealValuationOptions ideal;  // Hensel precision schedule for f = 1 profiles
    unsigned lambda_cap = 0;      // 0 -> 4p
};

// g = sum_{x != 0} zeta_p^{-c(x)} zeta_q^{Tr(x)} with the structural checks
// that need nothing beyond g and G. Throws invariant_violation when G does
// not collapse into Z[zeta_p].
GaussSumRecord gauss_sum(const FieldDesc& fd);

// zeta_q + zeta_p^rho zeta_q^{u^-1} + ... + zeta_p^{(q-2) rho} zeta_q^{u^-(q-2)}.
BiCycInt resolvent_form(u64 p, u64 q, u64 rho);

// The unique rho with tau(g) = zeta_p^rho g, tau: zeta_q -> zeta_q^u.
u64 extract_rho(const BiCycInt& g);

// Per-ideal profile (f = 1) or norm certificate (f > 1); appends checks.
StickelbergerProfile verify_stickelberger(GaussSumRecord& record, const FieldDesc& fd, const GaussOptions& opts = {});

// Valuations of g + 1, G + 1 and G^p + 1 at lambda; appends checks.
PiAdicProfile pi_adic_profile(GaussSumRecord& record, const GaussOptions& opts = {});

// Full verification pipeline used by the CLI and the acceptance suite.
GaussSumRecord verify_gauss(u64 p, u64 q, const GaussOptions& opts = {});

// Smallest prime q = 1 mod p, q <= q_max, with p^((q-1)/p) = 1 mod q; 0 if none.
u64 find_pth_power_prime(u64 p, u64 q_max);

}  // namespace stickel
