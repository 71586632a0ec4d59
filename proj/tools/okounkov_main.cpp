#include <iostream>

#include "CLI11.hpp"
#include "okb/cli.hpp"

int main(int argc, char** argv) {
    using okb::cli::RunConfig;
    RunConfig cfg;
    CLI::App app{"Okounkov bodies and semigroups of flagged projective varieties"};
    app.require_subcommand(1);

    auto add_case_options = [&](CLI::App* sub) {
        sub->add_option("--case", cfg.case_name, "case study: p2, p3, quadric_surface, fermat_cubic");
        sub->add_option("--fixture", cfg.fixture, "JSON case-study fixture (overrides --case)");
        sub->add_option("--c", cfg.c, "multiple c with D = cH");
        sub->add_option("--max-level", cfg.max_level, "enumeration bound M");
        sub->add_option("--kind", cfg.kind, "powers, complete or both");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_flag("--verbose", cfg.verbose, "more output");
    };

    auto* compute = app.add_subcommand("compute", "semigroup and body estimate, compared with the predicted simplex");
    auto* certify = app.add_subcommand("certify", "finite generation by the vertex criterion");
    auto* verify = app.add_subcommand("verify-flag", "exact checks of the flag conditions");
    auto* toric = app.add_subcommand("export-toric", "normal fan rays of the computed body");
    auto* demo = app.add_subcommand("demo", "table over all shipped case studies");
    auto* lemma = app.add_subcommand("lemma-ec", "single-point members of degree-d classes on E(F_p)");
    for (auto* sub : {compute, certify, verify, toric, demo}) add_case_options(sub);
    lemma->add_option("--p", cfg.p, "prime");
    lemma->add_option("--a", cfg.a, "coefficient a of y^2 = x^3 + ax + b");
    lemma->add_option("--b", cfg.b, "coefficient b of y^2 = x^3 + ax + b");
    lemma->add_option("--d", cfg.d, "degree of the sampled classes");
    lemma->add_option("--samples", cfg.samples, "number of sampled classes");
    lemma->add_option("--seed", cfg.seed, "random seed");
    lemma->add_flag("--verbose", cfg.verbose, "list every sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : okb::cli::kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return okb::cli::run_command(cfg, std::cout, std::cerr);
}
