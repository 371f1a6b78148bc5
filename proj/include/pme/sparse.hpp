#pragma once

#include <vector>

namespace pme {

struct MeshGrid;

// Compressed sparse row matrix. For structured Q1 meshes the pattern is the
// 9-point node adjacency stencil; entries are stored sorted by column.
struct SparseMatrix {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col_idx;
    std::vector<double> values;

    int num_entries() const { return static_cast<int>(col_idx.size()); }

    // Index into values for entry (row, col); -1 if outside the pattern.
    int find(int row, int col) const;
    double at(int row, int col) const;

    void multiply(const std::vector<double>& x, std::vector<double>& y) const;
    std::vector<double> multiply(const std::vector<double>& x) const;

    double inf_norm() const;
};

// CSR skeleton of the Q1 node-adjacency graph of a structured mesh, values
// zero-initialized. Assembly accumulates into this fixed pattern, which keeps
// the result independent of element visiting order.
SparseMatrix make_q1_pattern(const MeshGrid& mesh);

}  // namespace pme
