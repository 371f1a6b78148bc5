#include "pme/assembly.hpp"

#include <stdexcept>

#include "pme/linsolve.hpp"

namespace pme {

namespace {

// Per-quadrature-point basis data on the reference square, precomputed once.
struct QuadCache {
    QuadratureRule rule;
    double value[4][4];   // [qp][local]
    double d_xi[4][4];
    double d_eta[4][4];

    QuadCache() : rule(gauss_2x2()) {
        for (int q = 0; q < 4; ++q) {
            for (int a = 0; a < 4; ++a) {
                const BasisEval e = eval_basis(a, rule.points[q][0], rule.points[q][1]);
                value[q][a] = e.value;
                d_xi[q][a] = e.d_xi;
                d_eta[q][a] = e.d_eta;
            }
        }
    }
};

const QuadCache& quad_cache() {
    static const QuadCache c;
    return c;
}

}  // namespace

SparseMatrix assemble_mass(const MeshGrid& mesh) {
    const QuadCache& qc = quad_cache();
    const double jac = mesh.hx * mesh.hy / 4.0;
    double me[4][4] = {};
    for (int q = 0; q < 4; ++q) {
        const double w = qc.rule.weights[q] * jac;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                me[a][b] += w * qc.value[q][a] * qc.value[q][b];
            }
        }
    }
    SparseMatrix M = make_q1_pattern(mesh);
    for (int ej = 0; ej < mesh.ny; ++ej) {
        for (int ei = 0; ei < mesh.nx; ++ei) {
            const auto en = mesh.element_nodes(ei, ej);
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    M.values[static_cast<std::size_t>(M.find(en[a], en[b]))] += me[a][b];
                }
            }
        }
    }
    return M;
}

SparseMatrix assemble_lumped_mass(const MeshGrid& mesh) {
    const SparseMatrix M = assemble_mass(mesh);
    SparseMatrix L = make_q1_pattern(mesh);
    for (int i = 0; i < M.n; ++i) {
        double rowsum = 0.0;
        for (int k = M.row_ptr[i]; k < M.row_ptr[i + 1]; ++k) {
            rowsum += M.values[static_cast<std::size_t>(k)];
        }
        L.values[static_cast<std::size_t>(L.find(i, i))] = rowsum;
    }
    return L;
}

SparseMatrix assemble_stiffness(const MeshGrid& mesh, const ScalarField& coefficient,
                                double kappa, double delta) {
    if (coefficient.grid != &mesh || coefficient.size() != mesh.num_nodes()) {
        throw std::invalid_argument("assemble_stiffness: coefficient field on a different mesh");
    }
    const QuadCache& qc = quad_cache();
    const double jac = mesh.hx * mesh.hy / 4.0;
    const double gx = 2.0 / mesh.hx;  // reference-to-physical gradient factors
    const double gy = 2.0 / mesh.hy;

    SparseMatrix A = make_q1_pattern(mesh);
    for (int ej = 0; ej < mesh.ny; ++ej) {
        for (int ei = 0; ei < mesh.nx; ++ei) {
            const auto en = mesh.element_nodes(ei, ej);
            double ke[4][4] = {};
            for (int q = 0; q < 4; ++q) {
                double wq = 0.0;
                for (int a = 0; a < 4; ++a) wq += qc.value[q][a] * coefficient[en[a]];
                const double c = (kappa * wq + delta) * qc.rule.weights[q] * jac;
                for (int a = 0; a < 4; ++a) {
                    for (int b = 0; b < 4; ++b) {
                        ke[a][b] += c * (gx * qc.d_xi[q][a] * gx * qc.d_xi[q][b] +
                                         gy * qc.d_eta[q][a] * gy * qc.d_eta[q][b]);
                    }
                }
            }
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    A.values[static_cast<std::size_t>(A.find(en[a], en[b]))] += ke[a][b];
                }
            }
        }
    }
    return A;
}

SparseMatrix assemble_convection(const MeshGrid& mesh, const VectorFunction& velocity) {
    const QuadCache& qc = quad_cache();
    const double jac = mesh.hx * mesh.hy / 4.0;
    const double gx = 2.0 / mesh.hx;
    const double gy = 2.0 / mesh.hy;

    SparseMatrix C = make_q1_pattern(mesh);
    for (int ej = 0; ej < mesh.ny; ++ej) {
        for (int ei = 0; ei < mesh.nx; ++ei) {
            const auto en = mesh.element_nodes(ei, ej);
            double ce[4][4] = {};
            for (int q = 0; q < 4; ++q) {
                const double x = mesh.xmin + (ei + 0.5 * (qc.rule.points[q][0] + 1.0)) * mesh.hx;
                const double y = mesh.ymin + (ej + 0.5 * (qc.rule.points[q][1] + 1.0)) * mesh.hy;
                const auto u = velocity(x, y);
                const double w = qc.rule.weights[q] * jac;
                for (int a = 0; a < 4; ++a) {
                    const double udotgrad = u[0] * gx * qc.d_xi[q][a] + u[1] * gy * qc.d_eta[q][a];
                    for (int b = 0; b < 4; ++b) {
                        ce[a][b] -= w * qc.value[q][b] * udotgrad;
                    }
                }
            }
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    C.values[static_cast<std::size_t>(C.find(en[a], en[b]))] += ce[a][b];
                }
            }
        }
    }
    return C;
}

ScalarField l2_project(const MeshGrid& mesh, const ScalarFunction& f, bool lumped) {
    const QuadCache& qc = quad_cache();
    const double jac = mesh.hx * mesh.hy / 4.0;

    std::vector<double> b(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
    for (int ej = 0; ej < mesh.ny; ++ej) {
        for (int ei = 0; ei < mesh.nx; ++ei) {
            const auto en = mesh.element_nodes(ei, ej);
            for (int q = 0; q < 4; ++q) {
                const double x = mesh.xmin + (ei + 0.5 * (qc.rule.points[q][0] + 1.0)) * mesh.hx;
                const double y = mesh.ymin + (ej + 0.5 * (qc.rule.points[q][1] + 1.0)) * mesh.hy;
                const double fv = f(x, y) * qc.rule.weights[q] * jac;
                for (int a = 0; a < 4; ++a) {
                    b[static_cast<std::size_t>(en[a])] += fv * qc.value[q][a];
                }
            }
        }
    }

    const SparseMatrix M = assemble_mass(mesh);
    ScalarField out(mesh);
    if (lumped) {
        for (int i = 0; i < M.n; ++i) {
            double rowsum = 0.0;
            for (int k = M.row_ptr[i]; k < M.row_ptr[i + 1]; ++k) {
                rowsum += M.values[static_cast<std::size_t>(k)];
            }
            out[i] = b[static_cast<std::size_t>(i)] / rowsum;
        }
        return out;
    }
    // Consistent mass solve; M is SPD with condition number independent of h.
    const auto [x, report] = solve_cg(M, b, std::vector<double>(b.size(), 0.0), 1e-14, 0.0,
                                      10 * M.n);
    if (!report.success) {
        throw std::runtime_error("l2_project: mass solve failed to converge");
    }
    out.values = x;
    return out;
}

void apply_dirichlet(SparseMatrix& A, std::vector<double>& rhs, const MeshGrid& mesh,
                     double boundary_value) {
    for (int i = 0; i < A.n; ++i) {
        if (mesh.boundary[static_cast<std::size_t>(i)]) {
            for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
                A.values[static_cast<std::size_t>(k)] = (A.col_idx[k] == i) ? 1.0 : 0.0;
            }
            rhs[static_cast<std::size_t>(i)] = boundary_value;
        } else {
            for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
                const int j = A.col_idx[k];
                if (mesh.boundary[static_cast<std::size_t>(j)]) {
                    rhs[static_cast<std::size_t>(i)] -= A.values[static_cast<std::size_t>(k)] * boundary_value;
                    A.values[static_cast<std::size_t>(k)] = 0.0;
                }
            }
        }
    }
}

}  // namespace pme
