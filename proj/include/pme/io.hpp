#pragma once

#include <string>
#include <vector>

#include "pme/diagnostics.hpp"
#include "pme/mesh.hpp"
#include "pme/simulation.hpp"

namespace pme {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Header "x,y,c,chat", one row per node in row-major node order, values with
// 17 significant digits.
void write_csv(const Snapshot& snapshot, const MeshGrid& mesh, const std::string& path);

// One row per step with every DiagnosticsRecord field; the support-area
// columns are labeled with their thresholds.
void write_diagnostics_csv(const std::vector<DiagnosticsRecord>& records,
                           const std::vector<double>& thetas, const std::string& path);

// VTK legacy ASCII, DATASET STRUCTURED_POINTS, with point scalars "c" and
// "chat".
void write_vtk(const Snapshot& snapshot, const MeshGrid& mesh, const std::string& path);

}  // namespace pme
