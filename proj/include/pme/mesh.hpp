#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace pme {

// Structured tensor mesh of an axis-aligned rectangle with bilinear (Q1)
// quadrilateral elements. Nodes are numbered row-major, j*(nx+1)+i, and
// element (i,j) lists its four corner nodes counter-clockwise.
struct MeshGrid {
    double xmin = 0.0, ymin = 0.0;
    double xmax = 1.0, ymax = 1.0;
    int nx = 1, ny = 1;
    double hx = 1.0, hy = 1.0;
    std::vector<std::uint8_t> boundary;  // 1 if node lies on the rectangle boundary

    int num_nodes() const { return (nx + 1) * (ny + 1); }
    int num_elements() const { return nx * ny; }

    int node_index(int i, int j) const { return j * (nx + 1) + i; }
    double node_x(int node) const { return xmin + hx * (node % (nx + 1)); }
    double node_y(int node) const { return ymin + hy * (node / (nx + 1)); }

    std::array<int, 4> element_nodes(int ei, int ej) const {
        return {node_index(ei, ej), node_index(ei + 1, ej),
                node_index(ei + 1, ej + 1), node_index(ei, ej + 1)};
    }
    double element_area() const { return hx * hy; }
};

MeshGrid build_mesh(double xmin, double ymin, double xmax, double ymax, int nx, int ny);

// Value and reference-coordinate gradient of one bilinear shape function
// on [-1,1]^2. Local indices run counter-clockwise from (-1,-1).
struct BasisEval {
    double value;
    double d_xi;
    double d_eta;
};

BasisEval eval_basis(int local_index, double xi, double eta);

struct QuadratureRule {
    std::vector<std::array<double, 2>> points;
    std::vector<double> weights;
};

// 2x2 Gauss rule on the reference square, exact up to bi-degree 3.
QuadratureRule gauss_2x2();

// Nodal coefficients of a Q1 finite-element function on a MeshGrid.
struct ScalarField {
    const MeshGrid* grid = nullptr;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const MeshGrid& m, double fill = 0.0)
        : grid(&m), values(static_cast<std::size_t>(m.num_nodes()), fill) {}

    double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(values.size()); }
};

}  // namespace pme
