// Command-line front end; all work happens in stickel::dispatch.

#include <CLI11.hpp>

#include <iostream>

#include "stickel/report.hpp"

int main(int argc, char** argv) {
    using stickel::RunConfig;
    RunConfig cfg;
    CLI::App app{"Exact verification of Gauss sum, Stickelberger and regularity identities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(stickel::kToolName) + " " + stickel::kToolVersion);

    const auto positive = CLI::PositiveNumber;

    auto* scan = app.add_subcommand("scan-irregular", "Q-root scan against the Bernoulli oracle (TSV)");
    scan->add_option("--pmax", cfg.pmax, "largest prime scanned")->required()->check(positive);
    scan->add_option("--pmin", cfg.pmin, "smallest prime reported")->check(positive);
    scan->add_option("--jobs,-j", cfg.jobs, "threads")->check(positive);
    scan->add_option("--format", cfg.format)->check(CLI::IsMember({"tsv", "json"}));

    auto* bern = app.add_subcommand("bernoulli", "B_k mod p for even k in [2, p-3] (TSV)");
    bern->add_option("--p,-p", cfg.p, "odd prime")->required();
    bern->add_option("--format", cfg.format)->check(CLI::IsMember({"tsv", "json"}));

    auto* stick = app.add_subcommand("stickelberger", "Stickelberger element and its quotient polynomials");
    stick->require_subcommand(1);
    auto* show = stick->add_subcommand("show", "dump S, P, delta, Q, Q1, S2 as JSON");
    show->add_option("-p,--p", cfg.p, "odd prime")->required();
    show->add_option("-q,--q", cfg.q, "prime(s) of degree f > 1 for S2")->delimiter(',');
    show->add_option("--v", cfg.v, "primitive root mod p (default: smallest)");

    auto* gauss = app.add_subcommand("gauss", "Gauss sums");
    gauss->require_subcommand(1);
    auto* verify = gauss->add_subcommand("verify", "construct g and G and run every structural check");
    verify->add_option("-p,--p", cfg.p, "odd prime")->required();
    verify->add_option("-q,--q", cfg.q, "prime(s) q != p")->required()->delimiter(',');
    verify->add_option("--hensel-cap", cfg.hensel_cap, "largest Hensel precision (default 16p)")->check(positive);
    verify->add_option("--valuation-cap", cfg.valuation_cap, "largest lambda-valuation computed (default 4p)")->check(positive);

    auto* princ = app.add_subcommand("principality", "p-principality tests");
    princ->require_subcommand(1);
    auto* ptest = princ->add_subcommand("test", "S2 congruences for a prime of degree f > 1");
    ptest->add_option("-p,--p", cfg.p, "odd prime")->required();
    ptest->add_option("-q,--q", cfg.q, "prime(s) with f > 1")->required()->delimiter(',');
    ptest->add_option("--v", cfg.v, "primitive root mod p (default: smallest)");
    auto* pcor = princ->add_subcommand("corollary", "f = (p-1)/2 corollary, p = 3 mod 4");
    pcor->add_option("-p,--p", cfg.p, "odd prime")->required();
    pcor->add_option("--v", cfg.v, "primitive root mod p (default: smallest)");
    auto* probe = princ->add_subcommand("probe", "search q1 = a + lambda^(p+1) x of prime norm");
    probe->add_option("-p,--p", cfg.p, "odd prime")->required();
    probe->add_option("--bound", cfg.probe_bound, "candidates examined")->check(positive);
    probe->add_option("--coeff-bound", cfg.coeff_bound, "x coefficients in [-r, r]")->check(CLI::NonNegativeNumber);
    probe->add_option("--jobs,-j", cfg.jobs, "threads")->check(positive);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return stickel::kExitBadInput;
    }

    if (scan->parsed()) cfg.command = "scan-irregular";
    else if (bern->parsed()) cfg.command = "bernoulli";
    else if (show->parsed()) cfg.command = "stickelberger show";
    else if (verify->parsed()) cfg.command = "gauss verify";
    else if (ptest->parsed()) cfg.command = "principality test";
    else if (pcor->parsed()) cfg.command = "principality corollary";
    else if (probe->parsed()) cfg.command = "principality probe";

    return stickel::dispatch(cfg, std::cout, std::cerr);
}
