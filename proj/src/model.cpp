#include "pme/model.hpp"

#include <stdexcept>

#include "pme/assembly.hpp"

namespace pme {

ModelParams ModelParams::paper_preset() {
    ModelParams p;
    p.d = 1.0;
    p.a = 0.5 * p.N_A * p.k_b * p.T;
    return p;
}

double diffusion_coefficient(const CoefficientLaw& law, double c) {
    if (law.tag == CoefficientTag::heat_constant) return law.constant_diffusivity;
    return law.params.d * (1.0 - law.params.gamma() * c);
}

double to_hat(double c, const ModelParams& params, bool simplified) {
    if (simplified) return 1.0 - c;
    return 0.5 * params.d * (1.0 - params.gamma() * c);
}

double from_hat(double chat, const ModelParams& params, bool simplified) {
    if (simplified) return 1.0 - chat;
    return (1.0 - 2.0 * chat / params.d) / params.gamma();
}

ScalarField to_hat(const ScalarField& c, const ModelParams& params, bool simplified) {
    ScalarField out(*c.grid);
    for (int i = 0; i < c.size(); ++i) out[i] = to_hat(c[i], params, simplified);
    return out;
}

ScalarField from_hat(const ScalarField& chat, const ModelParams& params, bool simplified) {
    ScalarField out(*chat.grid);
    for (int i = 0; i < chat.size(); ++i) out[i] = from_hat(chat[i], params, simplified);
    return out;
}

double phi(double c, const ModelParams& params) {
    return params.d * c - 0.5 * params.d * params.gamma() * c * c;
}

double phi_prime(double c, const ModelParams& params) {
    return params.d * (1.0 - params.gamma() * c);
}

std::vector<double> perikinetic_rate(const ScalarField& c, double alpha, double d,
                                     const MeshGrid& mesh) {
    if (c.grid != &mesh) throw std::invalid_argument("perikinetic_rate: field on a different mesh");
    // <c grad c, grad phi_i> is the stiffness form with coefficient c applied to c.
    const SparseMatrix A = assemble_stiffness(mesh, c, 1.0, 0.0);
    std::vector<double> r = A.multiply(c.values);
    for (double& v : r) v *= 2.0 * alpha * d;
    return r;
}

}  // namespace pme
