#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pme/sparse.hpp"

namespace pme {

enum class SolveMethod { cg, direct };

struct SolveReport {
    int iterations = 0;
    double residual = 0.0;
    SolveMethod method = SolveMethod::cg;
    bool success = false;
};

// Thrown by solve_direct when elimination hits a zero pivot.
struct SingularPivotError : std::runtime_error {
    int step;
    explicit SingularPivotError(int step_index)
        : std::runtime_error("solve_direct: singular pivot at elimination step " +
                             std::to_string(step_index)),
          step(step_index) {}
};

// Jacobi-preconditioned conjugate gradient. A must be SPD; stops when
// ||b - Ax||_2 <= rtol*||b||_2 + atol. A failure report (never an exception)
// is returned on max_iter or NaN, so the caller can escalate to solve_direct.
std::pair<std::vector<double>, SolveReport> solve_cg(const SparseMatrix& A,
                                                     const std::vector<double>& b,
                                                     const std::vector<double>& x0,
                                                     double rtol = 1e-12, double atol = 0.0,
                                                     int max_iter = -1);

// Banded LU with partial pivoting. Handles symmetric indefinite systems from
// the dominant-cohesion runs; the bandwidth of the Q1 stencil is nx+2.
std::pair<std::vector<double>, SolveReport> solve_direct(const SparseMatrix& A,
                                                         const std::vector<double>& b);

}  // namespace pme
