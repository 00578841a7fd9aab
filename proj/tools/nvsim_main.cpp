#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "nvsim/runner.hpp"
#include "nvsim/scenario.hpp"
#include "nvsim/version.hpp"

namespace {

nvsim::Scenario load_by_name_or_path(const std::string& arg) {
    if (const auto* shipped = nvsim::find_shipped_scenario(arg)) {
        return nvsim::parse_scenario_text(shipped->text, "<shipped:" + arg + ">");
    }
    return nvsim::load_scenario(arg);
}

std::string default_out_dir() {
    if (const char* env = std::getenv("NVSIM_OUT")) return env;
    return ".";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nvsim — microwave-cavity NV-ensemble simulator"};
    app.require_subcommand(1);

    std::string scenario_arg;
    std::string out_dir = default_out_dir();
    int threads = 0;

    auto* run_cmd = app.add_subcommand("run", "run a scenario and write its data files");
    run_cmd->add_option("scenario", scenario_arg, "scenario file path or shipped name")
        ->required();
    run_cmd->add_option("--out", out_dir, "output directory (default $NVSIM_OUT or .)");
    run_cmd->add_option("--threads", threads, "worker threads for sweeps (0 = all cores)");

    auto* list_cmd = app.add_subcommand("list", "list shipped figure-reproduction scenarios");

    auto* validate_cmd =
        app.add_subcommand("validate", "parse and validate a scenario, print its fingerprint");
    validate_cmd->add_option("scenario", scenario_arg, "scenario file path or shipped name")
        ->required();

    auto* version_cmd = app.add_subcommand("version", "print version");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const nvsim::Scenario sc = load_by_name_or_path(scenario_arg);
            for (const auto& n : sc.notices) std::cerr << "notice: " << n << "\n";
            nvsim::RunOptions opt;
            opt.out_dir = out_dir;
            opt.threads = threads;
            const nvsim::RunResult res = nvsim::run(sc, opt);
            std::cout << sc.name << ": task=" << res.task << " rows=" << res.points
                      << " wall=" << res.seconds << "s ->";
            for (const auto& f : res.files) std::cout << " " << f.string();
            std::cout << "\n";
        } else if (list_cmd->parsed()) {
            for (const auto& s : nvsim::list_scenarios()) {
                std::cout << s.name << "\t" << s.description << "\n";
            }
        } else if (validate_cmd->parsed()) {
            const nvsim::Scenario sc = load_by_name_or_path(scenario_arg);
            for (const auto& n : sc.notices) std::cerr << "notice: " << n << "\n";
            for (const auto& [k, v] : sc.canonical) std::cout << k << " = " << v << "\n";
            std::cout << "fingerprint = " << sc.fingerprint << "\n";
        } else if (version_cmd->parsed()) {
            std::cout << "nvsim " << nvsim::kVersion << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
