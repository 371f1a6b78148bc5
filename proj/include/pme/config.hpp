#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pme/model.hpp"

namespace pme {

enum class InitialData { block, ring, constant, barenblatt };
enum class Transform { simplified, general, identity };
enum class SolverChoice { automatic, cg, direct };
enum class PicardPolicy { accept_continue, abort };

struct RunConfig {
    double xmin = 0.0, ymin = 0.0, xmax = 1.0, ymax = 2.0;
    int nx = 64, ny = 128;
    double tau = 1e-4;
    int n_steps = 600;
    // Lumped (row-sum) mass in the time term keeps the implicit step an
    // M-matrix system, so iterates respect the bounds of the data; the
    // consistent mass does not and oscillates near steep fronts.
    bool lumped_time_mass = true;
    double picard_tol = 1e-8;
    int picard_iter_max = 40;
    PicardPolicy picard_policy = PicardPolicy::accept_continue;
    CoefficientTag law = CoefficientTag::vdw_nonlinear;
    ModelParams params = ModelParams::paper_preset();
    double kappa = 1.0;
    double delta = 0.0;
    Transform transform = Transform::simplified;
    double boundary_value = 1.0;  // Dirichlet value for the transformed variable
    InitialData initial = InitialData::block;
    double initial_constant = 0.0;
    double barenblatt_c = 0.0506;
    double barenblatt_t0 = 0.125;
    int snapshot_every = 100;
    std::string output_dir = "out";
    SolverChoice solver = SolverChoice::automatic;
    std::vector<double> thetas = {1e-2, 1e-3, 1e-4};

    // Throws std::invalid_argument on inconsistent settings; returns warnings
    // (e.g. indicator breakpoints that miss element edges).
    std::vector<std::string> validate() const;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key-value text, '#' comments; unknown keys are errors naming the key
// and line.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

// Initial concentration profiles. block is the indicator of
// [0.25,0.75]x[0.5,1.5]; ring is the supersaturated core/frame profile of the
// aggregation scenario; barenblatt evaluates the self-similar profile at t0.
double initial_data(const RunConfig& cfg, double x, double y);

// Transformed initial value fed to the solver.
double initial_data_hat(const RunConfig& cfg, double x, double y);

double apply_transform(const RunConfig& cfg, double c);
double invert_transform(const RunConfig& cfg, double chat);

}  // namespace pme
