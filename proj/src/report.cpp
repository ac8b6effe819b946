#include "stickel/report.hpp"

#include <ostream>

#include "stickel/errors.hpp"
#include "stickel/serialize.hpp"

namespace stickel {

namespace {

struct Failure {
    std::string item;
    std::string check;
    std::string detail;
};

struct Envelope {
    json config;
    json records = json::array();
    std::vector<Failure> failures;
    std::size_t checks = 0;

    void check(const std::string& item, const std::string& name, bool ok, const std::string& detail = {}) {
        ++checks;
        if (!ok) failures.push_back({item, name, detail});
    }
};

json echo(const RunConfig& c, const std::string& format) {
    json j{{"command", c.command}, {"format", format}};
    if (c.command == "scan-irregular") {
        j["pmin"] = c.pmin;
        j["pmax"] = c.pmax;
    } else {
        j["p"] = c.p;
    }
    if (!c.q.empty()) j["q"] = c.q;
    if (c.v) j["v"] = *c.v;
    if (c.command == "gauss verify") {
        j["hensel_cap"] = c.hensel_cap;
        j["valuation_cap"] = c.valuation_cap;
    }
    if (c.command == "principality probe") {
        j["bound"] = c.probe_bound;
        j["coeff_bound"] = c.coeff_bound;
    }
    return j;
}

int finish(const Envelope& env, std::ostream& out, std::ostream& err, bool print_json) {
    if (print_json) {
        json failures = json::array();
        for (const auto& f : env.failures) {
            json fj{{"item", f.item}, {"check", f.check}};
            if (!f.detail.empty()) fj["detail"] = f.detail;
            failures.push_back(std::move(fj));
        }
        const json report{{"tool", kToolName},
                          {"version", kToolVersion},
                          {"config", env.config},
                          {"records", env.records},
                          {"summary", {{"records", env.records.size()}, {"checks", env.checks}, {"failures", env.failures.size()}}},
                          {"failures", std::move(failures)}};
        out << report.dump(2) << '\n';
    }
    for (const auto& f : env.failures) err << "FAIL " << f.item << ": " << f.check << (f.detail.empty() ? "" : " (" + f.detail + ")") << '\n';
    return env.failures.empty() ? kExitOk : kExitCheckFailed;
}

std::string list(const std::vector<u64>& xs) {
    if (xs.empty()) return "-";
    std::string s;
    for (u64 x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

void require_prime_p(u64 p) {
    if (p < 3 || !is_prime(p)) throw invalid_input("p = " + std::to_string(p) + " is not an odd prime");
}

u64 root_for(const RunConfig& c, u64 p) {
    if (!c.v) return primitive_root(p);
    if (!is_primitive_root(*c.v % p, p)) throw invalid_input("v = " + std::to_string(*c.v) + " is not a primitive root mod " + std::to_string(p));
    return *c.v;
}

int run_scan(const RunConfig& c, const std::string& fmt, std::ostream& out, std::ostream& err) {
    if (c.pmax == 0) throw invalid_input("scan-irregular: --pmax is required");
    if (c.pmax > kMaxScanPrime) throw invalid_input("scan-irregular: --pmax above " + std::to_string(kMaxScanPrime));
    if (c.pmin > c.pmax) throw invalid_input("scan-irregular: --pmin exceeds --pmax");
    Envelope env;
    env.config = echo(c, fmt);
    std::vector<RegularityVerdict> rows;
    for (auto& r : scan_irregular(c.pmax, c.jobs)) {
        if (r.p >= c.pmin) rows.push_back(std::move(r));
    }
    for (const auto& r : rows) {
        const std::string item = "p=" + std::to_string(r.p);
        // No odd root forces regularity; the converse is the desk-scale observation.
        env.check(item, "irregular_prime_has_odd_root", !r.irregular || !r.odd_roots.empty());
        env.check(item, "odd_root_implies_irregular", r.odd_roots.empty() || r.irregular);
        env.records.push_back(to_json(r));
    }
    if (fmt == "tsv") {
        out << "p\tverdict\todd_roots\tirregular_indices\tagreement\n";
        for (const auto& r : rows) {
            out << r.p << '\t' << (r.irregular ? "irregular" : "regular") << '\t' << list(r.odd_roots) << '\t'
                << list(r.irregular_indices) << '\t' << (r.agreement ? "yes" : "no") << '\n';
        }
    }
    return finish(env, out, err, fmt == "json");
}

int run_bernoulli(const RunConfig& c, const std::string& fmt, std::ostream& out, std::ostream& err) {
    require_prime_p(c.p);
    if (c.p > kMaxScanPrime) throw invalid_input("bernoulli: p above " + std::to_string(kMaxScanPrime));
    Envelope env;
    env.config = echo(c, fmt);
    const auto table = bernoulli_table_mod_p(c.p);
    for (const auto& [k, b] : table) env.records.push_back(json{{"k", k}, {"B_k_mod_p", b}});
    if (fmt == "tsv") {
        out << "k\tB_k_mod_p\n";
        for (const auto& [k, b] : table) out << k << '\t' << b << '\n';
    }
    return finish(env, out, err, fmt == "json");
}

int run_stickelberger(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_prime_p(c.p);
    const u64 p = c.p, v = root_for(c, p);
    Envelope env;
    env.config = echo(c, "json");
    const std::string item = "p=" + std::to_string(p);

    const GroupRingElt S = stickelberger_S(p, v);
    const GroupRingElt P = polynomial_P(p, v);
    const GroupRingElt Q = polynomial_Q(p, v);
    const auto delta = delta_coeffs(p, v);
    const auto q1 = polynomial_Q1_factorization(p, v);
    const GroupRingElt pQ = Q * static_cast<i64>(p);
    bool delta_range = delta[0] == 0;
    for (i64 d : delta) delta_range = delta_range && d <= 0 && d > -static_cast<i64>(p);
    env.check(item, "S_equals_P", S == P);
    env.check(item, "P_times_sigma_minus_v_equals_pQ", P * GroupRingElt::sigma_minus(p, static_cast<i64>(v)) == pQ);
    env.check(item, "delta_range", delta_range);
    env.check(item, "Q_equals_Q1_times_half_sum", q1.holds);

    json rec{{"p", p}, {"v", v}, {"S", to_json(S)}, {"P", to_json(P)}};
    json dj = json::array();
    for (i64 d : delta) dj.push_back(std::to_string(d));
    rec["delta"] = std::move(dj);
    rec["Q"] = to_json(Q);
    rec["Q1"] = to_json(q1.q1);

    // S2 for the requested q, or for the smallest prime of each degree f > 1.
    std::vector<u64> qs = c.q;
    if (qs.empty()) {
        std::vector<u64> seen;
        for (u64 f = 2; f < p; ++f) {
            if ((p - 1) % f != 0) continue;
            for (u64 q = 2;; ++q) {
                if (q != p && is_prime(q) && multiplicative_order(q % p, p) == f) {
                    qs.push_back(q);
                    break;
                }
            }
        }
    }
    json s2s = json::array();
    for (u64 q : qs) {
        const u64 f = multiplicative_order(q % p, p);
        const GroupRingElt s2 = polynomial_S2(p, q, v);
        json coeffs = json::array();
        for (u64 i = 0; i < (p - 1) / f; ++i) coeffs.push_back(std::to_string(s2[i]));
        s2s.push_back(json{{"q", q}, {"f", f}, {"m", (p - 1) / f}, {"coeffs", std::move(coeffs)}});
    }
    rec["S2"] = std::move(s2s);
    env.records.push_back(std::move(rec));
    return finish(env, out, err, true);
}

int run_gauss(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_prime_p(c.p);
    if (c.q.empty()) throw invalid_input("gauss verify: at least one -q is required");
    GaussOptions opts;
    opts.ideal.max_precision = c.hensel_cap;
    opts.lambda_cap = c.valuation_cap;
    Envelope env;
    env.config = echo(c, "json");
    for (u64 q : c.q) {
        const GaussSumRecord rec = verify_gauss(c.p, q, opts);
        const std::string item = "p=" + std::to_string(c.p) + ",q=" + std::to_string(q);
        for (const auto& ch : rec.checks) {
            if (!ch.informational) env.check(item, ch.name, ch.passed, ch.detail);
        }
        env.records.push_back(to_json(rec));
    }
    return finish(env, out, err, true);
}

int run_principality(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_prime_p(c.p);
    Envelope env;
    env.config = echo(c, "json");
    const u64 p = c.p;
    if (c.command == "principality test") {
        if (c.q.empty()) throw invalid_input("principality test: at least one -q is required");
        const u64 v = root_for(c, p);
        for (u64 q : c.q) {
            const auto r = principality_test(p, q, v);
            env.check("p=" + std::to_string(p) + ",q=" + std::to_string(q), "full_orbit_sum_identity", r.full_orbit_identity);
            env.records.push_back(to_json(r));
        }
    } else if (c.command == "principality corollary") {
        const auto r = half_degree_corollary(p, root_for(c, p));
        const std::string item = "p=" + std::to_string(p);
        env.check(item, "orbit_total_is_odd", r.total_is_odd);
        env.check(item, "sigma_nonzero_mod_p", r.p_principal, "sigma=" + r.sigma.get_str());
        env.records.push_back(to_json(r));
    } else {
        if (c.probe_bound > kMaxProbeBound) throw invalid_input("principality probe: --bound above " + std::to_string(kMaxProbeBound));
        ProbeOptions opts;
        opts.bound = c.probe_bound;
        opts.coeff_bound = c.coeff_bound;
        opts.jobs = c.jobs;
        const auto r = principal_norm_probe(p, opts);
        for (const auto& w : r.witnesses) {
            env.check("p=" + std::to_string(p) + ",q=" + w.q.get_str(), "p^((q-1)/p)=1_mod_q", w.holds, "index=" + std::to_string(w.index));
        }
        env.records.push_back(to_json(r));
    }
    return finish(env, out, err, true);
}

}  // namespace

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const bool tabular = c.command == "scan-irregular" || c.command == "bernoulli";
    const std::string fmt = c.format.empty() ? (tabular ? "tsv" : "json") : c.format;
    try {
        if (fmt != "json" && fmt != "tsv") throw invalid_input("unknown format '" + fmt + "'");
        if (fmt == "tsv" && !tabular) throw invalid_input(c.command + ": only json output is available");
        if (c.jobs < 0) throw invalid_input("--jobs must be positive");
        if (c.command == "scan-irregular") return run_scan(c, fmt, out, err);
        if (c.command == "bernoulli") return run_bernoulli(c, fmt, out, err);
        if (c.command == "stickelberger show") return run_stickelberger(c, out, err);
        if (c.command == "gauss verify") return run_gauss(c, out, err);
        if (c.command == "principality test" || c.command == "principality corollary" || c.command == "principality probe") {
            return run_principality(c, out, err);
        }
        throw invalid_input("unknown command '" + c.command + "'");
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const precision_exhausted& e) {
        err << "error: " << e.what() << " (raise --hensel-cap)\n";
        return kExitCheckFailed;
    } catch (const invariant_violation& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace stickel
