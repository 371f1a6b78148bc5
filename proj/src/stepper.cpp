#include "pme/stepper.hpp"

#include <cmath>

namespace pme {

std::pair<ScalarField, SolveReport> picard_step(const ScalarField& u_prev,
                                                const ScalarField& u_guess, double tau,
                                                const MeshGrid& mesh, const SparseMatrix& mass,
                                                double kappa, double delta, double boundary_value,
                                                const SparseMatrix* convection,
                                                SolverChoice solver) {
    SparseMatrix K = assemble_stiffness(mesh, u_guess, kappa, delta);
    for (std::size_t k = 0; k < K.values.size(); ++k) {
        K.values[k] = mass.values[k] + tau * K.values[k];
    }
    if (convection) {
        for (std::size_t k = 0; k < K.values.size(); ++k) {
            K.values[k] += tau * convection->values[k];
        }
    }
    std::vector<double> rhs = mass.multiply(u_prev.values);
    apply_dirichlet(K, rhs, mesh, boundary_value);

    ScalarField out(mesh);
    if (solver == SolverChoice::direct) {
        auto [x, rep] = solve_direct(K, rhs);
        out.values = std::move(x);
        return {std::move(out), rep};
    }
    auto [x, rep] = solve_cg(K, rhs, u_guess.values, 1e-12, 0.0, 10 * K.n);
    if (!rep.success && solver == SolverChoice::automatic) {
        auto [xd, repd] = solve_direct(K, rhs);
        out.values = std::move(xd);
        return {std::move(out), repd};
    }
    out.values = std::move(x);
    return {std::move(out), rep};
}

StepResult advance_time_step(const ScalarField& u_prev, const PicardSettings& settings,
                             double tau, const StepProblem& p, int step) {
    ScalarField guess = u_prev;
    ScalarField frozen_constant;
    const bool heat = p.law == CoefficientTag::heat_constant;
    if (heat) frozen_constant = ScalarField(p.mesh, p.heat_diffusivity);

    StepResult res;
    res.u_next = u_prev;
    for (int k = 1; k <= settings.iter_max; ++k) {
        const ScalarField& coeff = heat ? frozen_constant : guess;
        auto [u_new, rep] = picard_step(u_prev, coeff, tau, p.mesh, p.mass, p.kappa, p.delta,
                                        p.boundary_value, p.convection, p.solver);
        // For the heat law the coefficient is frozen but the warm start and
        // error measurement still use the running iterate.
        double err2 = 0.0;
        bool finite = true;
        for (int i = 0; i < u_new.size(); ++i) {
            const double d = u_new[i] - guess[i];
            err2 += d * d;
            finite = finite && std::isfinite(u_new[i]);
        }
        if (!finite || !std::isfinite(err2)) throw BlowUpError(step);
        res.iterations = k;
        res.error = std::sqrt(err2);
        res.last_solve = rep;
        guess = std::move(u_new);
        if (!rep.success) {
            res.u_next = std::move(guess);
            res.converged = false;
            return res;
        }
        if (res.error < settings.tol) {
            res.converged = true;
            break;
        }
    }
    res.u_next = std::move(guess);
    if (!res.converged && settings.policy == PicardPolicy::abort) {
        throw PicardNonconvergenceError(step);
    }
    return res;
}

}  // namespace pme
