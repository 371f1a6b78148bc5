#include "pme/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace pme {

namespace {

ScalarField post_process(const RunConfig& cfg, const ScalarField& chat) {
    ScalarField c(*chat.grid);
    for (int i = 0; i < chat.size(); ++i) c[i] = invert_transform(cfg, chat[i]);
    return c;
}

DiagnosticsRecord measure(const RunConfig& cfg, const SparseMatrix& mass, int step,
                          const ScalarField& chat, const ScalarField& c, const StepResult* sr) {
    DiagnosticsRecord r;
    r.step = step;
    r.time = step * cfg.tau;
    r.min_chat = *std::min_element(chat.values.begin(), chat.values.end());
    r.max_chat = *std::max_element(chat.values.begin(), chat.values.end());
    r.min_c = *std::min_element(c.values.begin(), c.values.end());
    r.max_c = *std::max_element(c.values.begin(), c.values.end());
    const auto Mc = mass.multiply(c.values);
    r.mass_c = 0.0;
    for (double v : Mc) r.mass_c += v;
    for (double theta : cfg.thetas) r.support_areas.push_back(support_measure(c, theta));
    if (sr) {
        r.picard_iterations = sr->iterations;
        r.converged = sr->converged;
        r.picard_error = sr->error;
    }
    return r;
}

Snapshot take_snapshot(int step, double tau, const ScalarField& chat, const ScalarField& c) {
    Snapshot s;
    s.step = step;
    s.time = step * tau;
    s.c = c.values;
    s.chat = chat.values;
    return s;
}

}  // namespace

SimulationResult run_simulation(const RunConfig& cfg) {
    cfg.validate();

    SimulationResult result;
    result.mesh = build_mesh(cfg.xmin, cfg.ymin, cfg.xmax, cfg.ymax, cfg.nx, cfg.ny);
    const MeshGrid& mesh = result.mesh;
    const SparseMatrix mass = assemble_mass(mesh);
    // The time term uses the lumped mass by default (discrete maximum
    // principle); diagnostics always integrate with the consistent mass.
    const SparseMatrix time_mass =
        cfg.lumped_time_mass ? assemble_lumped_mass(mesh) : assemble_mass(mesh);

    // Indicator data is projected with the lumped mass so nodal values stay
    // inside the data's range; smooth data gets the consistent projection.
    const bool indicator = cfg.initial == InitialData::block || cfg.initial == InitialData::ring;
    ScalarField chat = l2_project(
        mesh, [&](double x, double y) { return initial_data_hat(cfg, x, y); }, indicator);

    PicardSettings settings{cfg.picard_tol, cfg.picard_iter_max, cfg.picard_policy};
    StepProblem problem{mesh,      time_mass, cfg.law,    cfg.params.d, cfg.kappa,
                        cfg.delta, cfg.boundary_value, nullptr,    cfg.solver};

    ScalarField c = post_process(cfg, chat);
    result.records.push_back(measure(cfg, mass, 0, chat, c, nullptr));
    result.snapshots.push_back(take_snapshot(0, cfg.tau, chat, c));

    for (int n = 1; n <= cfg.n_steps; ++n) {
        StepResult sr;
        try {
            sr = advance_time_step(chat, settings, cfg.tau, problem, n);
        } catch (const BlowUpError&) {
            result.blew_up = true;
            result.blow_up_step = n;
            DiagnosticsRecord r;
            r.step = n;
            r.time = n * cfg.tau;
            r.blow_up = true;
            result.records.push_back(r);
            break;
        }
        chat = std::move(sr.u_next);
        c = post_process(cfg, chat);
        result.records.push_back(measure(cfg, mass, n, chat, c, &sr));
        const bool due = cfg.snapshot_every > 0 && n % cfg.snapshot_every == 0;
        if (due || n == cfg.n_steps) {
            result.snapshots.push_back(take_snapshot(n, cfg.tau, chat, c));
        }
    }

    result.chat = std::move(chat);
    result.c = std::move(c);
    return result;
}

}  // namespace pme
