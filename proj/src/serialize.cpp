#include "stickel/serialize.hpp"

#include <string>

#include "stickel/errors.hpp"

namespace stickel {

namespace {

template <class Seq>
json string_array(const Seq& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(mpz_class(x)));
    return out;
}

}  // namespace

json to_json(const mpz_class& n) { return n.get_str(); }

mpz_class mpz_from_json(const json& j) {
    if (!j.is_string()) throw invalid_input("expected a decimal string");
    mpz_class n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw invalid_input("malformed integer: " + j.get<std::string>());
    return n;
}

json to_json(const CycInt& a) { return string_array(a.coeffs()); }

CycInt cyc_from_json(u64 p, const json& j) {
    if (!j.is_array() || j.size() != p - 1) throw invalid_input("CycInt: expected p-1 coefficients");
    std::vector<mpz_class> c;
    for (const auto& x : j) c.push_back(mpz_from_json(x));
    return CycInt(p, std::move(c));
}

json to_json(const BiCycInt& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(to_json(a.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

BiCycInt bicyc_from_json(u64 p, u64 q, const json& j) {
    BiCycInt a(p, q);
    if (!j.is_array() || j.size() != a.rows()) throw invalid_input("BiCycInt: expected p-1 rows");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!j[i].is_array() || j[i].size() != a.cols()) throw invalid_input("BiCycInt: expected q-1 columns");
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = mpz_from_json(j[i][k]);
    }
    return a;
}

json to_json(const GroupRingElt& g) {
    json out = json::array();
    for (i64 c : g.coeffs()) out.push_back(std::to_string(c));
    return out;
}

json to_json(const Valuation& v) {
    return json{{"value", v.value}, {"infinite", v.infinite}, {"capped", v.capped}};
}

json to_json(const Check& c) {
    json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.informational) j["informational"] = true;
    return j;
}

json to_json(const GaussSumRecord& r) {
    json j{{"p", r.p}, {"q", r.q}, {"f", r.f}, {"v", r.v}, {"u", r.u}};
    j["g"] = to_json(r.g);
    if (r.g_reduced) j["g_in_Z_zeta_p"] = to_json(*r.g_reduced);
    j["G"] = to_json(r.G);
    j["rho"] = r.rho ? json(*r.rho) : json(nullptr);
    if (r.stickelberger) {
        const auto& s = *r.stickelberger;
        json sj;
        if (r.f == 1) {
            sj["ideal_valuations_of_G"] = s.valuations;
            sj["relabeling"] = s.relabel ? json(*s.relabel) : json(nullptr);
            sj["canonical_label"] = s.canonical_label;
            sj["norm_G"] = to_json(s.norm_G);
        } else {
            sj["norm_g"] = to_json(s.norm_g);
            sj["S2_coefficient_sum"] = s.s2_coeff_sum;
        }
        j["stickelberger"] = std::move(sj);
    }
    if (r.pi_adic) {
        const auto& a = *r.pi_adic;
        j["pi_adic"] = json{{"g_plus_1", to_json(a.g_plus_1)},
                            {"G_plus_1", to_json(a.G_plus_1)},
                            {"G_p_plus_1", to_json(a.Gp_plus_1)},
                            {"p_is_pth_power_mod_q", a.p_is_pth_power_mod_q}};
    }
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    j["all_passed"] = r.all_passed();
    return j;
}

json to_json(const RegularityVerdict& r) {
    return json{{"p", r.p},
                {"v", r.v},
                {"verdict", r.irregular ? "irregular" : "regular"},
                {"odd_roots", r.odd_roots},
                {"all_roots", r.all_roots},
                {"irregular_indices", r.irregular_indices},
                {"agreement", r.agreement}};
}

json to_json(const BHalfCheck& r) {
    return json{{"p", r.p},      {"v", r.v},
                {"Q_at_minus_1_mod_p", r.q_at_minus_one},
                {"S1", to_json(r.s1)}, {"S2", to_json(r.s2)}, {"V", to_json(r.V)},
                {"identities", r.identities}, {"nonzero", r.nonzero}};
}

json to_json(const PrincipalityReport& r) {
    json sig = json::array();
    for (std::size_t l = 0; l < r.sigma_values.size(); ++l) sig.push_back(json{{"l", l + 1}, {"value", r.sigma_values[l]}});
    json s2 = json::array();
    for (i64 c : r.s2) s2.push_back(std::to_string(c));
    return json{{"p", r.p},
                {"q", r.q},
                {"v", r.v},
                {"f", r.f},
                {"m", r.m},
                {"S2", std::move(s2)},
                {"sigma_values", std::move(sig)},
                {"full_orbit_sum", to_json(r.full_orbit_sum)},
                {"full_orbit_identity", r.full_orbit_identity},
                {"certificate", r.p_principal ? "p-principal" : "inconclusive"},
                {"note", "sufficient condition only; an inconclusive result does not assert non-principality"}};
}

json to_json(const HalfDegreeCorollary& r) {
    return json{{"p", r.p},
                {"v", r.v},
                {"even_orbit_sum", to_json(r.even_sum)},
                {"odd_orbit_sum", to_json(r.odd_sum)},
                {"sigma", to_json(r.sigma)},
                {"sigma_mod_p", r.sigma_mod_p},
                {"total_is_odd", r.total_is_odd},
                {"verdict", r.p_principal ? "every prime of degree (p-1)/2 is p-principal" : "inconclusive"}};
}

json to_json(const ProbeWitness& w) {
    json x = json::array();
    for (i64 c : w.x) x.push_back(c);
    return json{{"index", w.index},
                {"a", w.a},
                {"x", std::move(x)},
                {"q", to_json(w.q)},
                {"residue", to_json(w.residue)},
                {"holds", w.holds},
                {"primality", w.probabilistic ? "probabilistic" : "deterministic"}};
}

json to_json(const ProbeReport& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(to_json(w));
    return json{{"p", r.p},
                {"bound", r.options.bound},
                {"coeff_bound", r.options.coeff_bound},
                {"primality_rounds_above_2^64", kProbePrimalityReps},
                {"examined", r.examined},
                {"exhausted", r.exhausted},
                {"status", r.witnesses.empty() ? "no candidates" : "witnesses found"},
                {"counterexamples", r.counterexamples()},
                {"witnesses", std::move(ws)}};
}

}  // namespace stickel
