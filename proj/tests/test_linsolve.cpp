#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pme/assembly.hpp"
#include "pme/linsolve.hpp"
#include "pme/mesh.hpp"

using namespace pme;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<double>>& d) {
    SparseMatrix A;
    A.n = static_cast<int>(d.size());
    A.row_ptr.push_back(0);
    for (int i = 0; i < A.n; ++i) {
        for (int j = 0; j < A.n; ++j) {
            if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0.0 || i == j) {
                A.col_idx.push_back(j);
                A.values.push_back(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            }
        }
        A.row_ptr.push_back(static_cast<int>(A.col_idx.size()));
    }
    return A;
}

double residual_norm(const SparseMatrix& A, const std::vector<double>& x,
                     const std::vector<double>& b) {
    const auto Ax = A.multiply(x);
    double s = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) s += (Ax[i] - b[i]) * (Ax[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("CG solves the identity in at most one iteration") {
    const SparseMatrix I = from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const std::vector<double> b = {3.0, -1.5, 0.25};
    const auto [x, rep] = solve_cg(I, b, std::vector<double>(3, 0.0));
    CHECK(rep.success);
    CHECK(rep.iterations <= 1);
    for (int i = 0; i < 3; ++i) CHECK(x[static_cast<std::size_t>(i)] == doctest::Approx(b[static_cast<std::size_t>(i)]));
}

TEST_CASE("CG reproduces the hand-eliminated 2x2 solution") {
    const SparseMatrix A = from_dense({{4, 1}, {1, 3}});
    const auto [x, rep] = solve_cg(A, {1.0, 2.0}, {0.0, 0.0});
    CHECK(rep.success);
    CHECK(rep.method == SolveMethod::cg);
    CHECK(x[0] == doctest::Approx(1.0 / 11.0).epsilon(1e-10));
    CHECK(x[1] == doctest::Approx(7.0 / 11.0).epsilon(1e-10));
}

TEST_CASE("warm start with the exact solution returns immediately") {
    const SparseMatrix A = from_dense({{4, 1}, {1, 3}});
    const std::vector<double> exact = {1.0 / 11.0, 7.0 / 11.0};
    const auto [x, rep] = solve_cg(A, {1.0, 2.0}, exact);
    CHECK(rep.success);
    CHECK(rep.iterations <= 1);
    CHECK(x[0] == doctest::Approx(exact[0]).epsilon(1e-12));
}

TEST_CASE("CG reports failure instead of throwing when starved of iterations") {
    const MeshGrid m = build_mesh(0, 0, 1, 1, 10, 10);
    const SparseMatrix A = assemble_stiffness(m, ScalarField(m, 1.0), 1.0, 1.0);
    std::vector<double> b(static_cast<std::size_t>(A.n), 1.0);
    const auto [x, rep] = solve_cg(A, b, std::vector<double>(b.size(), 0.0), 1e-14, 0.0, 2);
    CHECK_FALSE(rep.success);
}

TEST_CASE("CG satisfies the residual contract on a mesh system") {
    const MeshGrid m = build_mesh(0, 0, 1, 2, 12, 24);
    SparseMatrix A = assemble_stiffness(m, ScalarField(m, 1.0), 1.0, 0.0);
    const SparseMatrix M = assemble_mass(m);
    for (std::size_t k = 0; k < A.values.size(); ++k) {
        A.values[k] = M.values[k] + 1e-4 * A.values[k];
    }
    std::vector<double> b(static_cast<std::size_t>(A.n));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::sin(0.01 * static_cast<double>(i));
    const auto [x, rep] = solve_cg(A, b, std::vector<double>(b.size(), 0.0));
    CHECK(rep.success);
    double bn = 0.0;
    for (double v : b) bn += v * v;
    CHECK(residual_norm(A, x, b) <= 1e-12 * std::sqrt(bn) * (1 + 1e-9));
}

TEST_CASE("direct solve handles an indefinite diagonal") {
    const SparseMatrix A = from_dense({{2, 0}, {0, -3}});
    const auto [x, rep] = solve_direct(A, {2.0, 3.0});
    CHECK(rep.success);
    CHECK(rep.method == SolveMethod::direct);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("direct solve pivots through a zero diagonal") {
    const SparseMatrix A = from_dense({{0, 1}, {1, 0}});
    const auto [x, rep] = solve_direct(A, {5.0, -2.0});
    CHECK(rep.success);
    CHECK(x[0] == doctest::Approx(-2.0));
    CHECK(x[1] == doctest::Approx(5.0));
}

TEST_CASE("direct solve flags singular matrices with the failing step") {
    const SparseMatrix A = from_dense({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}});
    bool threw = false;
    try {
        solve_direct(A, {1.0, 1.0, 1.0});
    } catch (const SingularPivotError& e) {
        threw = true;
        CHECK(e.step >= 0);
        CHECK(e.step < 3);
    }
    CHECK(threw);
}

TEST_CASE("cross-method oracle: CG and banded LU agree on random SPD systems") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 50;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    // symmetric, banded (half-bandwidth 4), strictly diagonally dominant
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j <= std::min(n - 1, i + 4); ++j) {
            const double v = u(rng);
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) off += std::abs(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = off + 1.0;
    }
    const SparseMatrix A = from_dense(d);
    std::vector<double> b(static_cast<std::size_t>(n));
    for (auto& v : b) v = u(rng);

    const auto [xc, repc] = solve_cg(A, b, std::vector<double>(b.size(), 0.0));
    const auto [xd, repd] = solve_direct(A, b);
    CHECK(repc.success);
    CHECK(repd.success);
    for (int i = 0; i < n; ++i) {
        CHECK(xc[static_cast<std::size_t>(i)] ==
              doctest::Approx(xd[static_cast<std::size_t>(i)]).epsilon(1e-9));
    }
}

TEST_CASE("direct solve meets its residual bound on a mesh-sized indefinite system") {
    const MeshGrid m = build_mesh(0, 0, 1, 1, 12, 12);
    ScalarField w(m);
    for (int i = 0; i < w.size(); ++i) w[i] = (i % 3 == 0) ? -0.5 : 1.0;  // indefinite coefficient
    SparseMatrix A = assemble_stiffness(m, w, 1.0, 0.0);
    const SparseMatrix M = assemble_mass(m);
    for (std::size_t k = 0; k < A.values.size(); ++k) {
        A.values[k] = M.values[k] + 1e-3 * A.values[k];
    }
    std::vector<double> b(static_cast<std::size_t>(A.n));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::cos(0.05 * static_cast<double>(i));
    const auto [x, rep] = solve_direct(A, b);
    CHECK(rep.success);
    double xinf = 0.0, binf = 0.0;
    for (double v : x) xinf = std::max(xinf, std::abs(v));
    for (double v : b) binf = std::max(binf, std::abs(v));
    const auto Ax = A.multiply(x);
    double rn = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) rn += (Ax[i] - b[i]) * (Ax[i] - b[i]);
    CHECK(std::sqrt(rn) <= 1e-10 * (A.inf_norm() * xinf + binf));
}

TEST_CASE("determinism: identical inputs give identical solutions") {
    const SparseMatrix A = from_dense({{4, 1}, {1, 3}});
    const auto [x1, r1] = solve_cg(A, {1.0, 2.0}, {0.0, 0.0});
    const auto [x2, r2] = solve_cg(A, {1.0, 2.0}, {0.0, 0.0});
    CHECK(x1 == x2);
    CHECK(r1.iterations == r2.iterations);
}
