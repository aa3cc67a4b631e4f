// optomech: batch front-end for the 1D opto-mechanical scattering library.
//
//   optomech run --config cfg.json [--out path] [--format csv|json] [--threads N]
//   optomech check [--out path]
//
// `run` evaluates the scan described by the config and emits a
// machine-readable table; `check` runs the cross-oracle limit suite and
// exits nonzero on any failure.  OPTOMECH_THREADS is honored when
// --threads is not given.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "../src/cli/config.hpp"
#include "../src/cli/limits_check.hpp"
#include "../src/cli/run.hpp"
#include "optomech/version.hpp"

using namespace optomech;

int main(int argc, char** argv)
{
    CLI::App app{"1D transfer-matrix opto-mechanics: forces, friction, diffusion, temperature"};
    app.set_version_flag("--version", std::string("optomech ") + kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    int threads = 0;

    // top-level scalar overrides (flag name = config field name)
    std::string mode_override;
    std::string figure_override;
    double k0L = 0.0, k0x = 0.0, input_flux = 0.0, k = 0.0, eps = 0.0;

    CLI::App* run_cmd = app.add_subcommand("run", "evaluate a configured scan");
    run_cmd->add_option("--config", config_path, "JSON run configuration")->required();
    run_cmd->add_option("--out", out_path, "output path (default: config output.path or stdout)");
    run_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_option("--threads", threads, "worker threads (default: OPTOMECH_THREADS or all cores)");
    run_cmd->add_option("--mode", mode_override, "override config mode");
    run_cmd->add_option("--figure", figure_override, "override figure selector (3|4a|4b|5)");
    run_cmd->add_option("--k0L", k0L);
    run_cmd->add_option("--k0x", k0x);
    run_cmd->add_option("--input_flux", input_flux);
    run_cmd->add_option("--k", k);
    run_cmd->add_option("--eps", eps);

    CLI::App* check_cmd = app.add_subcommand("check", "run the cross-oracle limit suite");
    check_cmd->add_option("--out", out_path, "report path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check_cmd)) {
            const cli::CheckOutcome outcome = cli::run_limits_check();
            if (out_path.empty()) {
                std::cout << outcome.report.dump(2) << "\n";
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out)
                    throw cli::IoError("cannot open report path '" + out_path + "'");
                out << outcome.report.dump(2) << "\n";
            }
            for (const auto& entry : outcome.report.at("checks"))
                std::cerr << (entry.at("pass").get<bool>() ? "[pass] " : "[FAIL] ")
                          << entry.at("name").get<std::string>() << "\n";
            return outcome.all_pass ? 0 : 1;
        }

        cli::RunConfig config = cli::load_config(config_path);
        cli::Json doc = cli::to_json(config);
        if (!mode_override.empty())
            doc["mode"] = mode_override;
        if (!figure_override.empty())
            doc["figure"] = figure_override;
        if (run_cmd->count("--k0L"))
            doc["k0L"] = k0L;
        if (run_cmd->count("--k0x"))
            doc["k0x"] = k0x;
        if (run_cmd->count("--input_flux"))
            doc["input_flux"] = input_flux;
        if (run_cmd->count("--k"))
            doc["k"] = k;
        if (run_cmd->count("--eps"))
            doc["eps"] = eps;
        if (!out_path.empty())
            doc["output"]["path"] = out_path;
        if (!format.empty())
            doc["output"]["format"] = format;
        config = cli::parse_config(doc); // re-validate after overrides

        return cli::run(config, cli::resolve_threads(threads), std::cout);
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cli::RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return 1;
    } catch (const cli::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
