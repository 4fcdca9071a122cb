// Command-line front end: simulate trajectories, tabulate convergence,
// run the property suite, export SVG snapshots.
#include "CLI11.hpp"

#include "bgp/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"birth-and-growth set evolution simulator"};
    app.require_subcommand(1);

    bgp::cli::RunConfig config;
    std::uint64_t seed_value = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd, bool needs_scenario = true) {
        auto* s = cmd->add_option("--scenario", config.scenario_path,
                                  "scenario config file (JSON)");
        if (needs_scenario) s->required();
        cmd->add_option("--tol", config.tol, "convergence tolerance")
            ->capture_default_str();
        cmd->add_option("--depth", config.depth, "max refinement depth")
            ->capture_default_str();
        cmd->add_option("--times", config.times, "output times (comma separated)")
            ->delimiter(',');
        cmd->add_option("--out", config.out_dir, "output directory")
            ->capture_default_str();
        cmd->add_option_function<std::uint64_t>(
            "--seed",
            [&](std::uint64_t v) {
                seed_value = v;
                seed_given = true;
            },
            "override the scenario seed");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "evolve and write snapshots");
    add_common(simulate);
    CLI::App* converge = app.add_subcommand("converge", "gap-vs-mesh table");
    add_common(converge);
    CLI::App* validate = app.add_subcommand("validate", "run the property suite");
    add_common(validate);
    validate->add_option("--seeds-count", config.seeds_count, "number of derived seeds")
        ->capture_default_str();
    CLI::App* exportsvg = app.add_subcommand("export-svg", "render snapshots as SVG");
    add_common(exportsvg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : bgp::cli::kExitInputError;
    }
    if (seed_given) config.seed_override = seed_value;

    if (simulate->parsed()) return bgp::cli::run_simulate(config);
    if (converge->parsed()) return bgp::cli::run_converge(config);
    if (validate->parsed()) return bgp::cli::run_validate(config);
    if (exportsvg->parsed()) return bgp::cli::run_export_svg(config);
    return bgp::cli::kExitInputError;
}
