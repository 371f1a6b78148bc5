#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "pme/simulation.hpp"
#include "pme/stepper.hpp"

using namespace pme;

namespace {

ScalarField block_hat(const MeshGrid& m) {
    // lumped projection of the transformed block indicator (chat = 1 - c0)
    return l2_project(
        m,
        [](double x, double y) {
            return (0.25 <= x && x <= 0.75 && 0.5 <= y && y <= 1.5) ? 0.0 : 1.0;
        },
        true);
}

double norm2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("constant boundary data is a steady state of picard_step") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 8, 16);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const ScalarField u(m, 1.0);
    const auto [next, rep] = picard_step(u, u, 1e-4, m, mass, 1.0, 0.0, 1.0);
    CHECK(rep.success);
    for (int i = 0; i < next.size(); ++i) CHECK(next[i] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("constant boundary data is a fixed point of advance_time_step") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 8, 16);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const StepProblem p{m, mass, CoefficientTag::vdw_nonlinear, 1.0, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::automatic};
    const PicardSettings s{1e-8, 40, PicardPolicy::accept_continue};
    const auto res = advance_time_step(ScalarField(m, 1.0), s, 1e-4, p);
    CHECK(res.converged);
    CHECK(res.iterations <= 2);
    for (int i = 0; i < res.u_next.size(); ++i) {
        CHECK(res.u_next[i] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("heat law converges in exactly two iterations and equals one implicit Euler step") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 16, 32);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const ScalarField u0 = block_hat(m);
    const double tau = 1e-4, d = 1.0;

    const StepProblem p{m, mass, CoefficientTag::heat_constant, d, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::cg};
    const PicardSettings s{1e-8, 40, PicardPolicy::accept_continue};
    const auto res = advance_time_step(u0, s, tau, p);
    CHECK(res.converged);
    CHECK(res.iterations == 2);

    // reference: assemble (M + tau*d*A) u = M u0 with Dirichlet value 1
    SparseMatrix K = assemble_stiffness(m, ScalarField(m, d), 1.0, 0.0);
    for (std::size_t k = 0; k < K.values.size(); ++k) {
        K.values[k] = mass.values[k] + tau * K.values[k];
    }
    std::vector<double> rhs = mass.multiply(u0.values);
    apply_dirichlet(K, rhs, m, 1.0);
    const auto [x, rep] = solve_cg(K, rhs, u0.values);
    REQUIRE(rep.success);
    CHECK(norm2(res.u_next.values, x) < 1e-9);
}

TEST_CASE("converged steps satisfy the nonlinear fixed-point residual") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 16, 32);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const double tol = 1e-8, tau = 1e-4;
    const StepProblem p{m, mass, CoefficientTag::vdw_nonlinear, 1.0, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::cg};
    const PicardSettings s{tol, 40, PicardPolicy::accept_continue};
    const auto res = advance_time_step(block_hat(m), s, tau, p);
    REQUIRE(res.converged);

    // one more frozen-coefficient solve at the converged iterate moves it by
    // at most a small multiple of the tolerance
    const auto [refix, rep] = picard_step(block_hat(m), res.u_next, tau, m, mass, 1.0, 0.0, 1.0);
    REQUIRE(rep.success);
    const double moved = norm2(refix.values, res.u_next.values);
    MESSAGE("fixed-point residual after convergence: " << moved << " (tol " << tol << ")");
    CHECK(moved <= 100 * tol);
}

TEST_CASE("iterates respect the data bounds over a short nonlinear run") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 16, 32);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const StepProblem p{m, mass, CoefficientTag::vdw_nonlinear, 1.0, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::cg};
    const PicardSettings s{1e-8, 40, PicardPolicy::accept_continue};
    ScalarField u = block_hat(m);
    for (int n = 1; n <= 20; ++n) {
        const auto res = advance_time_step(u, s, 1e-4, p, n);
        CHECK(res.converged);
        u = res.u_next;
        for (int i = 0; i < u.size(); ++i) {
            CHECK(u[i] >= -1e-10);
            CHECK(u[i] <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("halving tau shrinks the step error (first-order time discretization)") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 16, 32);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const StepProblem p{m, mass, CoefficientTag::vdw_nonlinear, 1.0, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::cg};
    const PicardSettings s{1e-12, 60, PicardPolicy::accept_continue};

    auto evolve = [&](double tau, int steps) {
        ScalarField u = block_hat(m);
        for (int n = 1; n <= steps; ++n) u = advance_time_step(u, s, tau, p, n).u_next;
        return u;
    };
    const ScalarField a = evolve(1e-3, 10);
    const ScalarField b = evolve(5e-4, 20);
    const ScalarField c = evolve(2.5e-4, 40);
    const double e1 = norm2(a.values, b.values);
    const double e2 = norm2(b.values, c.values);
    MESSAGE("tau-halving errors: " << e1 << " -> " << e2);
    CHECK(e2 < 0.75 * e1);
}

TEST_CASE("non-finite states raise a blow-up error carrying the step index") {
    const MeshGrid m = build_mesh(0, 0, 1, 1, 4, 4);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const StepProblem p{m, mass, CoefficientTag::vdw_nonlinear, 1.0, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::direct};
    ScalarField u(m, 1.0);
    u[5] = std::numeric_limits<double>::quiet_NaN();
    const PicardSettings s{1e-8, 40, PicardPolicy::accept_continue};
    bool threw = false;
    try {
        advance_time_step(u, s, 1e-4, p, 17);
    } catch (const BlowUpError& e) {
        threw = true;
        CHECK(e.step == 17);
    }
    CHECK(threw);
}

TEST_CASE("nonconvergence policy: continue records the flag, strict mode throws") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 16, 32);
    const SparseMatrix mass = assemble_lumped_mass(m);
    const StepProblem p{m, mass, CoefficientTag::vdw_nonlinear, 1.0, 1.0, 0.0, 1.0, nullptr,
                        SolverChoice::cg};
    const ScalarField u0 = block_hat(m);

    const PicardSettings lax{1e-16, 1, PicardPolicy::accept_continue};
    const auto res = advance_time_step(u0, lax, 1e-4, p, 3);
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 1);

    const PicardSettings strict{1e-16, 1, PicardPolicy::abort};
    CHECK_THROWS_AS(advance_time_step(u0, strict, 1e-4, p, 3), PicardNonconvergenceError);
}

TEST_CASE("a zero-step simulation returns the projected initial data") {
    RunConfig cfg;
    cfg.nx = 16;
    cfg.ny = 32;
    cfg.n_steps = 0;
    const SimulationResult r = run_simulation(cfg);
    REQUIRE(r.records.size() == 1);
    REQUIRE(r.snapshots.size() == 1);
    const ScalarField expect = l2_project(
        r.mesh, [&](double x, double y) { return initial_data_hat(cfg, x, y); }, true);
    CHECK(norm2(r.chat.values, expect.values) < 1e-14);
    CHECK(r.records[0].mass_c == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("initial data equal to the boundary value is a fixed point of the whole run") {
    RunConfig cfg;
    cfg.nx = 8;
    cfg.ny = 16;
    cfg.n_steps = 25;
    cfg.initial = InitialData::constant;
    cfg.initial_constant = 0.0;  // chat = 1 - c = boundary value
    const SimulationResult r = run_simulation(cfg);
    CHECK_FALSE(r.blew_up);
    for (int i = 0; i < r.chat.size(); ++i) {
        CHECK(r.chat[i] == doctest::Approx(1.0).epsilon(1e-8));
    }
}
