#include "pme/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pme/assembly.hpp"

namespace pme {

double support_measure(const ScalarField& field, double theta) {
    const MeshGrid& m = *field.grid;
    double area = 0.0;
    for (int ej = 0; ej < m.ny; ++ej) {
        for (int ei = 0; ei < m.nx; ++ei) {
            const auto en = m.element_nodes(ei, ej);
            bool inside = true;
            for (int a = 0; a < 4; ++a) inside = inside && field[en[a]] > theta;
            if (inside) area += m.element_area();
        }
    }
    return area;
}

double total_mass(const ScalarField& field) {
    const SparseMatrix M = assemble_mass(*field.grid);
    const auto Mu = M.multiply(field.values);
    double s = 0.0;
    for (double v : Mu) s += v;
    return s;
}

double barenblatt(double x, double y, double t, double C, double kappa) {
    if (!(t > 0.0)) throw std::invalid_argument("barenblatt: t must be positive");
    const double r2 = x * x + y * y;
    const double profile = C - r2 / (8.0 * kappa * std::sqrt(t));
    return profile > 0.0 ? profile / std::sqrt(t) : 0.0;
}

FieldError compare_fields(const ScalarField& a, const ScalarField& b) {
    if (a.grid != b.grid) throw std::invalid_argument("compare_fields: fields on different meshes");
    std::vector<double> d(a.values.size());
    double linf = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = a.values[i] - b.values[i];
        linf = std::max(linf, std::abs(d[i]));
    }
    const SparseMatrix M = assemble_mass(*a.grid);
    const auto Md = M.multiply(d);
    double l2sq = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) l2sq += d[i] * Md[i];
    return {std::sqrt(std::max(0.0, l2sq)), linf};
}

double front_position(const ScalarField& field, double theta, Axis axis, double coordinate) {
    const MeshGrid& m = *field.grid;
    const bool along_x = axis == Axis::x;
    const int n_along = along_x ? m.nx : m.ny;
    const double h_along = along_x ? m.hx : m.hy;
    const double o_along = along_x ? m.xmin : m.ymin;

    const int n_trans = along_x ? m.ny : m.nx;
    const double h_trans = along_x ? m.hy : m.hx;
    const double o_trans = along_x ? m.ymin : m.xmin;
    int line = static_cast<int>(std::lround((coordinate - o_trans) / h_trans));
    line = std::clamp(line, 0, n_trans);

    auto value = [&](int k) {
        return along_x ? field[m.node_index(k, line)] : field[m.node_index(line, k)];
    };

    if (value(n_along) > theta) return o_along + n_along * h_along;
    for (int k = n_along - 1; k >= 0; --k) {
        const double v = value(k);
        if (v > theta) {
            const double vn = value(k + 1);
            const double frac = (v - theta) / (v - vn);
            return o_along + (k + frac) * h_along;
        }
    }
    return o_along;  // no front
}

}  // namespace pme
