#pragma once

#include "pme/config.hpp"
#include "pme/diagnostics.hpp"
#include "pme/stepper.hpp"

namespace pme {

struct Snapshot {
    int step = 0;
    double time = 0.0;
    std::vector<double> c;
    std::vector<double> chat;
};

struct SimulationResult {
    MeshGrid mesh;
    ScalarField chat;  // final transformed solution
    ScalarField c;     // final post-processed concentration
    std::vector<DiagnosticsRecord> records;
    std::vector<Snapshot> snapshots;
    bool blew_up = false;
    int blow_up_step = -1;
};

// Full pipeline: project the transformed initial data, run the implicit Euler
// / fixed-point time loop, record diagnostics each step and snapshots at the
// configured cadence (step 0 and the final step are always included). On
// blow-up the run stops gracefully with everything recorded up to the failure.
SimulationResult run_simulation(const RunConfig& config);

}  // namespace pme
