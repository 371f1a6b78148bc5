#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "pme/io.hpp"
#include "pme/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitSolverFailure = 3;
constexpr int kExitBlowUp = 4;

std::string preset_path(const std::string& name) {
    namespace fs = std::filesystem;
    const char* root = std::getenv("PME_PRESET_DIR");
    const fs::path base = root ? fs::path(root) : fs::path(PME_PRESET_DIR_DEFAULT);
    return (base / (name + ".cfg")).string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-element solver for the cohesive-diffusion model in its "
                 "porous-medium form"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a simulation from a config file or preset");
    std::string config_path;
    std::string out_dir;
    std::string preset;
    int snapshot_every = -1;
    int h_exp = 0;
    bool strict_picard = false;
    run->add_option("config", config_path, "Config file (flat key = value text)");
    run->add_option("--out", out_dir, "Output directory (overrides config and PME_OUT)");
    run->add_option("--snapshot-every", snapshot_every, "Snapshot cadence in steps");
    run->add_option("--preset", preset,
                    "Named preset: experiment1, experiment2, heat-reference, barenblatt")
        ->check(CLI::IsMember({"experiment1", "experiment2", "heat-reference", "barenblatt"}));
    run->add_option("--h-exp", h_exp, "Override mesh size to h = 2^-K on both axes");
    run->add_flag("--strict-picard", strict_picard,
                  "Abort instead of continuing when the fixed-point iteration stalls");

    CLI11_PARSE(app, argc, argv);

    pme::RunConfig cfg;
    try {
        if (!preset.empty() && !config_path.empty()) {
            std::cerr << "error: give either a config file or --preset, not both\n";
            return kExitConfigError;
        }
        if (preset.empty() && config_path.empty()) {
            std::cerr << "error: a config file or --preset is required\n";
            return kExitConfigError;
        }
        cfg = pme::parse_config(preset.empty() ? config_path : preset_path(preset));
        if (h_exp > 0) {
            const double h = std::pow(2.0, -h_exp);
            cfg.nx = static_cast<int>(std::lround((cfg.xmax - cfg.xmin) / h));
            cfg.ny = static_cast<int>(std::lround((cfg.ymax - cfg.ymin) / h));
        }
        if (snapshot_every >= 0) cfg.snapshot_every = snapshot_every;
        if (strict_picard) cfg.picard_policy = pme::PicardPolicy::abort;
        if (const char* env = std::getenv("PME_OUT")) cfg.output_dir = env;
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        for (const auto& w : cfg.validate()) std::cerr << "warning: " << w << "\n";
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        std::filesystem::create_directories(cfg.output_dir);
        const auto result = pme::run_simulation(cfg);

        for (const auto& snap : result.snapshots) {
            const std::string stem = cfg.output_dir + "/snapshot_" + std::to_string(snap.step);
            pme::write_csv(snap, result.mesh, stem + ".csv");
            pme::write_vtk(snap, result.mesh, stem + ".vtk");
        }
        pme::write_diagnostics_csv(result.records, cfg.thetas, cfg.output_dir + "/diagnostics.csv");

        const auto& last = result.records.back();
        std::cout << "completed " << last.step << " steps; min c = " << last.min_c
                  << ", max c = " << last.max_c << ", mass = " << last.mass_c << "\n";
        if (result.blew_up) {
            std::cerr << "blow-up stop at step " << result.blow_up_step << "\n";
            return kExitBlowUp;
        }
        return kExitOk;
    } catch (const pme::PicardNonconvergenceError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    } catch (const pme::SingularPivotError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolverFailure;
    }
}
