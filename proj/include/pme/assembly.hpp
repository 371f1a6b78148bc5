#pragma once

#include <functional>
#include <vector>

#include "pme/mesh.hpp"
#include "pme/sparse.hpp"

namespace pme {

using ScalarFunction = std::function<double(double, double)>;
using VectorFunction = std::function<std::array<double, 2>(double, double)>;

// M_ij = integral of phi_i phi_j over the mesh.
SparseMatrix assemble_mass(const MeshGrid& mesh);

// Row-sum lumped mass on the same sparsity pattern (off-diagonal zeros).
// Used in the time term of the stepper: together with the Q1 stiffness of a
// nonnegative coefficient it forms an M-matrix, so the implicit step obeys a
// discrete maximum principle; the consistent mass does not.
SparseMatrix assemble_lumped_mass(const MeshGrid& mesh);

// A_ij = integral of (kappa * w_h + delta) grad phi_i . grad phi_j, with w_h
// the Q1 interpolant of the frozen iterate evaluated at the Gauss points.
// The result is SPD when kappa*w_h + delta >= 0 there; indefinite coefficient
// fields are permitted (dominant-cohesion runs).
SparseMatrix assemble_stiffness(const MeshGrid& mesh, const ScalarField& coefficient,
                                double kappa, double delta);

// C_ij = -integral of phi_j u . grad phi_i. The caller asserts div u = 0.
SparseMatrix assemble_convection(const MeshGrid& mesh, const VectorFunction& velocity);

// L2 projection onto the Q1 space: solves M x = b with b_i = integral f phi_i
// (per-element 2x2 Gauss). With lumped=true the row-sum lumped mass is used
// instead, which keeps aligned indicator data inside its value range.
ScalarField l2_project(const MeshGrid& mesh, const ScalarFunction& f, bool lumped = false);

// Replaces boundary rows by identity with rhs = boundary_value and eliminates
// the matching columns into the rhs, so symmetry is preserved.
void apply_dirichlet(SparseMatrix& system, std::vector<double>& rhs, const MeshGrid& mesh,
                     double boundary_value);

}  // namespace pme
