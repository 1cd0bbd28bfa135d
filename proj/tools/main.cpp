#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subdiff/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"subdiff: finite-element simulator for subdiffusive tumour growth"};
    app.require_subcommand(1);

    std::string run_config;
    auto* run = app.add_subcommand("run", "run one simulation from a config file");
    run->add_option("config", run_config, "path to a key=value config file")->required();

    std::string sweep_config;
    std::vector<double> alphas;
    auto* sweep = app.add_subcommand(
        "sweep-alpha", "run one simulation per fractional exponent, concurrently");
    sweep->add_option("config", sweep_config, "path to a key=value config file")->required();
    sweep->add_option("--alphas", alphas, "comma-separated exponents in (0,1]")
        ->required()
        ->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run the verification battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage problems count as configuration errors
    }

    if (run->parsed()) return subdiff::cmd_run(run_config);
    if (sweep->parsed()) return subdiff::cmd_sweep_alpha(sweep_config, alphas);
    if (verify->parsed()) return subdiff::cmd_verify();
    return 1;
}
