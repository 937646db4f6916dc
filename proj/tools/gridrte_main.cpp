#include <exception>
#include <iostream>

#include "gridrte/commands.hpp"
#include "gridrte/version.hpp"

#include "CLI11.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo hurricane outage scenarios and recovery time estimates "
                 "for transmission networks"};
    app.set_version_flag("--version", gridrte::kToolVersion);
    app.require_subcommand(1);

    gridrte::GenerateOptions gen_opt;
    CLI::App* gen = app.add_subcommand(
        "generate", "Sample failure scenarios from a network's fragility data");
    gen->add_option("--network", gen_opt.network_path, "Network file")
        ->required()
        ->check(CLI::ExistingFile);
    gen->add_option("--seed", gen_opt.seed, "Master seed (64-bit unsigned)")->required();
    gen->add_option("--scenarios", gen_opt.n_scenarios, "Number of scenarios")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--out", gen_opt.out_dir, "Output directory")->required();
    gen->add_option("--workers", gen_opt.workers, "Worker threads (results are identical "
                                                  "at any count)")
        ->check(CLI::PositiveNumber);

    gridrte::RteOptions rte_opt;
    CLI::App* rte = app.add_subcommand(
        "rte", "Compute recovery time estimates for existing scenario files");
    rte->add_option("--network", rte_opt.network_path, "Network file")
        ->required()
        ->check(CLI::ExistingFile);
    rte->add_option("--input", rte_opt.scenario_paths,
                    "Scenario files or directories containing scenario_*.csv")
        ->required()
        ->expected(-1);
    rte->add_option("--params", rte_opt.params_path,
                    "Parameters file (defaults to the built-in tables)")
        ->check(CLI::ExistingFile);
    rte->add_option("--out", rte_opt.out_path, "Output report file (CSV)")->required();
    rte->add_option("--workers", rte_opt.workers, "Worker threads")->check(CLI::PositiveNumber);

    gridrte::StatsOptions stats_opt;
    CLI::App* stats =
        app.add_subcommand("stats", "Aggregate report files into ensemble statistics");
    stats->add_option("--input", stats_opt.report_paths, "Report files")
        ->required()
        ->expected(-1);
    stats->add_option("--out", stats_opt.out_dir, "Output directory")->required();

    gridrte::HardenOptions harden_opt;
    CLI::App* harden = app.add_subcommand(
        "harden", "Compare baseline vs hardened failure probabilities under common "
                  "random numbers");
    harden->add_option("--network", harden_opt.network_path, "Network file")
        ->required()
        ->check(CLI::ExistingFile);
    harden->add_option("--spec", harden_opt.spec_path, "Hardening spec file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    harden->add_option("--params", harden_opt.params_path, "Parameters file")
        ->check(CLI::ExistingFile);
    harden->add_option("--seed", harden_opt.seed, "Master seed")->required();
    harden->add_option("--scenarios", harden_opt.n_scenarios, "Number of scenarios")
        ->required()
        ->check(CLI::PositiveNumber);
    harden->add_option("--out", harden_opt.out_dir, "Output directory")->required();
    harden->add_option("--workers", harden_opt.workers, "Worker threads")
        ->check(CLI::PositiveNumber);

    gridrte::RunOptions run_opt;
    CLI::App* run = app.add_subcommand(
        "run", "Full pipeline: generate scenarios, compute reports, aggregate statistics");
    run->add_option("--network", run_opt.network_path, "Network file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--params", run_opt.params_path, "Parameters file")
        ->check(CLI::ExistingFile);
    run->add_option("--seed", run_opt.seed, "Master seed")->required();
    run->add_option("--scenarios", run_opt.n_scenarios, "Number of scenarios")
        ->required()
        ->check(CLI::PositiveNumber);
    run->add_option("--out", run_opt.out_dir, "Output directory")->required();
    run->add_option("--workers", run_opt.workers, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            gridrte::cmd_generate(gen_opt);
        } else if (rte->parsed()) {
            gridrte::cmd_rte(rte_opt);
        } else if (stats->parsed()) {
            gridrte::cmd_stats(stats_opt);
        } else if (harden->parsed()) {
            gridrte::cmd_harden(harden_opt);
        } else if (run->parsed()) {
            gridrte::cmd_run(run_opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gridrte::exit_code_for(e);
    }
    return 0;
}
