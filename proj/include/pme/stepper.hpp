#pragma once

#include <optional>

#include "pme/assembly.hpp"
#include "pme/config.hpp"
#include "pme/linsolve.hpp"
#include "pme/mesh.hpp"

namespace pme {

struct PicardSettings {
    double tol = 1e-8;        // Euclidean norm on coefficient vectors
    int iter_max = 40;
    PicardPolicy policy = PicardPolicy::accept_continue;
};

struct TimeGrid {
    double tau = 1e-4;
    int n_steps = 0;
    double time_at(int n) const { return n * tau; }
};

struct BlowUpError : std::runtime_error {
    int step;
    explicit BlowUpError(int step_index)
        : std::runtime_error("non-finite iterate at time step " + std::to_string(step_index)),
          step(step_index) {}
};

struct PicardNonconvergenceError : std::runtime_error {
    int step;
    explicit PicardNonconvergenceError(int step_index)
        : std::runtime_error("fixed-point iteration hit iter_max at time step " +
                             std::to_string(step_index)),
          step(step_index) {}
};

// One frozen-coefficient solve of
//   (M + tau [A(u_guess) + C]) u = M u_prev
// with Dirichlet rows eliminated symmetrically. The mass matrix is taken by
// reference because the time loop reuses it across iterations; the caller
// picks the consistent or the row-sum lumped matrix (the default pipeline
// lumps the time term to get a discrete maximum principle).
std::pair<ScalarField, SolveReport> picard_step(const ScalarField& u_prev,
                                                const ScalarField& u_guess, double tau,
                                                const MeshGrid& mesh, const SparseMatrix& mass,
                                                double kappa, double delta, double boundary_value,
                                                const SparseMatrix* convection = nullptr,
                                                SolverChoice solver = SolverChoice::automatic);

struct StepResult {
    ScalarField u_next;
    int iterations = 0;
    bool converged = false;
    double error = 0.0;        // last fixed-point increment norm
    SolveReport last_solve;
};

// Problem data shared by every time step of a run.
struct StepProblem {
    const MeshGrid& mesh;
    const SparseMatrix& mass;
    CoefficientTag law = CoefficientTag::vdw_nonlinear;
    double heat_diffusivity = 1.0;  // frozen coefficient when law == heat_constant
    double kappa = 1.0;
    double delta = 0.0;
    double boundary_value = 1.0;
    const SparseMatrix* convection = nullptr;
    SolverChoice solver = SolverChoice::automatic;
};

// Implicit Euler step with fixed-point linearization: iterate picard_step
// starting from u_guess = u_prev until ||u^k - u^{k-1}||_2 < tol or iter_max.
// Throws BlowUpError on non-finite iterates (step index filled by the caller's
// loop via the `step` argument).
StepResult advance_time_step(const ScalarField& u_prev, const PicardSettings& settings,
                             double tau, const StepProblem& problem, int step = 0);

}  // namespace pme
