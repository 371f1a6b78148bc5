#include "pme/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace pme {

MeshGrid build_mesh(double xmin, double ymin, double xmax, double ymax, int nx, int ny) {
    if (nx < 1 || ny < 1) {
        throw std::invalid_argument("build_mesh: element counts must be >= 1");
    }
    if (!(xmax > xmin) || !(ymax > ymin)) {
        throw std::invalid_argument("build_mesh: degenerate rectangle");
    }
    MeshGrid m;
    m.xmin = xmin;
    m.ymin = ymin;
    m.xmax = xmax;
    m.ymax = ymax;
    m.nx = nx;
    m.ny = ny;
    m.hx = (xmax - xmin) / nx;
    m.hy = (ymax - ymin) / ny;
    m.boundary.assign(static_cast<std::size_t>(m.num_nodes()), 0);
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            if (i == 0 || j == 0 || i == nx || j == ny) {
                m.boundary[static_cast<std::size_t>(m.node_index(i, j))] = 1;
            }
        }
    }
    return m;
}

BasisEval eval_basis(int local_index, double xi, double eta) {
    // Corner signs in counter-clockwise order.
    static constexpr double sx[4] = {-1.0, 1.0, 1.0, -1.0};
    static constexpr double sy[4] = {-1.0, -1.0, 1.0, 1.0};
    const double a = sx[local_index];
    const double b = sy[local_index];
    BasisEval e;
    e.value = 0.25 * (1.0 + a * xi) * (1.0 + b * eta);
    e.d_xi = 0.25 * a * (1.0 + b * eta);
    e.d_eta = 0.25 * b * (1.0 + a * xi);
    return e;
}

QuadratureRule gauss_2x2() {
    const double g = 1.0 / std::sqrt(3.0);
    QuadratureRule q;
    q.points = {{{-g, -g}}, {{g, -g}}, {{g, g}}, {{-g, g}}};
    q.weights = {1.0, 1.0, 1.0, 1.0};
    return q;
}

}  // namespace pme
