// Batch front end: nadisk <scenario> [--input f.json] [--output out] [--format json|csv] ...
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nadisk/cli.hpp"

int main(int argc, char** argv) {
    using namespace nadisk::cli;
    CLI::App app{"Exact experiments on disks over a non-archimedean field"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::size_t horizon = 0;
    CLI::Option* horizon_opt = nullptr;

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input", cfg.input, "input JSON path (default: stdin)");
        sub->add_option("--output", cfg.output, "report path (default: stdout)");
        sub->add_option("--stages", cfg.stages, "prescription stages, 0 for the most the plan allows");
        horizon_opt = sub->add_option("--horizon", horizon, "number of stages or circles to use");
        sub->add_option("--seed", cfg.seed, "seed for randomized fixtures");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->callback([&cfg, name, &horizon, opt = horizon_opt] {
            cfg.command = name;
            if (opt->count() > 0) cfg.horizon = horizon;
        });
        return sub;
    };
    add("newton", "Newton polygon, critical radii and zero counts of f");
    add("norm", "Gauss norm of f, or a greedy norm-targeting selection");
    add("zeta", "sup of |f| on a closed disk");
    add("xi", "local zero factor on a closed disk");
    add("prescribe", "build a function with prescribed zeros");
    add("verify", "check a function against a prescription");
    add("semcurve", "stage tables for a disk family, optionally along a radius grid");
    add("solve-radius", "radius at which xi reaches a target");
    CLI::App* recipe = add("recipe", "run a named scenario recipe");
    recipe->add_option("name", cfg.recipe, "recipe name")->required()->check(CLI::IsMember(recipe_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : InputError;
    }
    return run(cfg, std::cin, std::cout, std::cerr);
}
