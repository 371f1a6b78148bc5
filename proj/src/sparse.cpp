#include "pme/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "pme/mesh.hpp"

namespace pme {

int SparseMatrix::find(int row, int col) const {
    for (int k = row_ptr[row]; k < row_ptr[row + 1]; ++k) {
        if (col_idx[k] == col) return k;
    }
    return -1;
}

double SparseMatrix::at(int row, int col) const {
    const int k = find(row, col);
    return k < 0 ? 0.0 : values[static_cast<std::size_t>(k)];
}

void SparseMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    y.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            s += values[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(col_idx[k])];
        }
        y[static_cast<std::size_t>(i)] = s;
    }
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y;
    multiply(x, y);
    return y;
}

double SparseMatrix::inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            s += std::abs(values[static_cast<std::size_t>(k)]);
        }
        m = std::max(m, s);
    }
    return m;
}

SparseMatrix make_q1_pattern(const MeshGrid& mesh) {
    SparseMatrix A;
    A.n = mesh.num_nodes();
    A.row_ptr.assign(static_cast<std::size_t>(A.n) + 1, 0);

    const int nxp = mesh.nx + 1;
    const int nyp = mesh.ny + 1;
    auto row_width = [&](int i, int j) {
        const int wi = (i > 0 ? 1 : 0) + 1 + (i < nxp - 1 ? 1 : 0);
        const int wj = (j > 0 ? 1 : 0) + 1 + (j < nyp - 1 ? 1 : 0);
        return wi * wj;
    };
    for (int j = 0; j < nyp; ++j) {
        for (int i = 0; i < nxp; ++i) {
            A.row_ptr[static_cast<std::size_t>(mesh.node_index(i, j)) + 1] = row_width(i, j);
        }
    }
    for (int r = 0; r < A.n; ++r) A.row_ptr[static_cast<std::size_t>(r) + 1] += A.row_ptr[static_cast<std::size_t>(r)];

    A.col_idx.resize(static_cast<std::size_t>(A.row_ptr.back()));
    for (int j = 0; j < nyp; ++j) {
        for (int i = 0; i < nxp; ++i) {
            int k = A.row_ptr[static_cast<std::size_t>(mesh.node_index(i, j))];
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    const int ii = i + di, jj = j + dj;
                    if (ii < 0 || jj < 0 || ii >= nxp || jj >= nyp) continue;
                    A.col_idx[static_cast<std::size_t>(k++)] = mesh.node_index(ii, jj);
                }
            }
        }
    }
    A.values.assign(A.col_idx.size(), 0.0);
    return A;
}

}  // namespace pme
