#include "experiment.hpp"

#include "salpeter/errors.hpp"
#include "salpeter/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

namespace {

// Exit codes: 0 all assertions pass, 1 at least one assertion fails,
// 2 configuration or numerical-accuracy error.
constexpr int exit_ok = 0;
constexpr int exit_assertions_failed = 1;
constexpr int exit_config_error = 2;

int execute(const salpeter::lab::ExperimentConfig& config, const std::string& out_dir) {
    using namespace salpeter;

    lab::RunResult result;
    try {
        result = lab::run_experiment(config);
        lab::write_outputs(result, out_dir);
    } catch (const accuracy_failure& failure) {
        std::fprintf(stderr, "accuracy failure: %s\n", failure.what());
        return exit_config_error;
    } catch (const std::invalid_argument& error) {
        std::fprintf(stderr, "config error: %s\n", error.what());
        return exit_config_error;
    }

    int failed = 0;
    for (const lab::Assertion& a : result.assertions) {
        if (!a.pass) ++failed;
        std::printf("[%s] %s :: %s  (%.6g %s %.6g)\n", a.pass ? "PASS" : "FAIL",
                    a.suite.c_str(), a.name.c_str(), a.observed, a.relation.c_str(),
                    a.threshold);
    }
    std::printf("%zu assertions, %d failed; outputs in %s/\n", result.assertions.size(),
                failed, out_dir.c_str());
    return failed == 0 ? exit_ok : exit_assertions_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"salpeter_lab: three-way numerical laboratory for the free 1+1d "
                 "relativistic square-root evolution and its acausal tails"};
    app.set_version_flag("--version", salpeter::version_string);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";

    CLI::App* run = app.add_subcommand("run", "Run the mode selected by a config file");
    run->add_option("--config", config_path, "Flat key = value config file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "Output directory (default: out)");

    CLI::App* verify =
        app.add_subcommand("verify", "Run the full verification suite with default settings");
    verify->add_option("--out", out_dir, "Output directory (default: out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    salpeter::lab::ExperimentConfig config;
    if (run->parsed()) {
        try {
            config = salpeter::lab::load_config(config_path);
        } catch (const std::invalid_argument& error) {
            std::fprintf(stderr, "config error: %s\n", error.what());
            return exit_config_error;
        }
    } // verify: defaults already select verify-all

    return execute(config, out_dir);
}
