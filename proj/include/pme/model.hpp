#pragma once

#include "pme/mesh.hpp"

namespace pme {

// Physical constants of the cohesive-diffusion model and the derived scaling
// factors. gamma = 2a/(N_A k_b T) and c_star = 1/gamma, so the saturation
// scaling gamma * c_star == 1 holds exactly.
struct ModelParams {
    double d = 1.0;                 // diffusivity [m^2/s]
    double a = 1.0;                 // cohesion coefficient [N m^4 / mol^2]
    double T = 293.15;              // temperature [K]
    double k_b = 1.380649e-23;      // Boltzmann constant [J/K]
    double N_A = 6.02214076e23;     // Avogadro constant [1/mol]

    double gamma() const { return 2.0 * a / (N_A * k_b * T); }
    double c_star() const { return 1.0 / gamma(); }

    // d = 1, a = (1/2) N_A k_b T, so gamma = 1 and c_star = 1.
    static ModelParams paper_preset();
};

enum class CoefficientTag { vdw_nonlinear, heat_constant };

struct CoefficientLaw {
    CoefficientTag tag = CoefficientTag::vdw_nonlinear;
    ModelParams params;
    double constant_diffusivity = 1.0;  // used by heat_constant
};

// D(c) = d * (1 - gamma*c) for the van der Waals law; the constant
// diffusivity for the heat law. Negative values are meaningful and classify
// the dominant-cohesion (supersaturated) regime.
double diffusion_coefficient(const CoefficientLaw& law, double c);

// Affine change of variables between the concentration c and the porous
// medium variable. simplified=true uses chat = 1 - c; otherwise
// chat = (d/2)(1 - gamma*c).
double to_hat(double c, const ModelParams& params, bool simplified);
double from_hat(double chat, const ModelParams& params, bool simplified);
ScalarField to_hat(const ScalarField& c, const ModelParams& params, bool simplified);
ScalarField from_hat(const ScalarField& chat, const ModelParams& params, bool simplified);

// Quadratic flux potential Phi(c) = d*c - (d*gamma/2)*c^2 with Phi' = D.
double phi(double c, const ModelParams& params);
double phi_prime(double c, const ModelParams& params);

// Weak-form nodal residual of the perikinetic coagulation rate,
// r_i = 2*alpha*d * <c grad c, grad phi_i>. Diagnostic only; the rate is
// algebraically absorbed in the model's flux and never added by the solver.
std::vector<double> perikinetic_rate(const ScalarField& c, double alpha, double d,
                                     const MeshGrid& mesh);

}  // namespace pme
