#pragma once

#include <vector>

#include "pme/mesh.hpp"

namespace pme {

struct DiagnosticsRecord {
    int step = 0;
    double time = 0.0;
    double min_c = 0.0, max_c = 0.0;
    double min_chat = 0.0, max_chat = 0.0;
    double mass_c = 0.0;
    std::vector<double> support_areas;  // one per configured theta
    int picard_iterations = 0;
    bool converged = true;
    double picard_error = 0.0;
    bool blow_up = false;
};

// Inner support approximation: total area of elements whose four nodal
// values all exceed theta. Monotone nonincreasing in theta.
double support_measure(const ScalarField& field, double theta);

// Consistent mass: 1^T M u.
double total_mass(const ScalarField& field);

// Self-similar source solution of du/dt = div(kappa u grad u) in 2D:
//   u(x, t) = t^{-1/2} * max(0, C - |x|^2 / (8 kappa sqrt(t))).
// Mass is time-independent (= 4 pi kappa C^2) and the support radius grows
// like (8 kappa C)^{1/2} t^{1/4}.
double barenblatt(double x, double y, double t, double C, double kappa);

struct FieldError {
    double l2;    // mass-matrix weighted
    double linf;  // max nodal difference
};

FieldError compare_fields(const ScalarField& a, const ScalarField& b);

enum class Axis { x, y };

// Outermost theta-crossing of the nodal trace along the mesh line nearest
// the given transverse coordinate. Returns the axis minimum when the trace
// never exceeds theta, the axis maximum when even the outermost node does.
double front_position(const ScalarField& field, double theta, Axis axis, double coordinate);

}  // namespace pme
