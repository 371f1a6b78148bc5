#include "pme/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace pme {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::pair<std::vector<double>, SolveReport> solve_cg(const SparseMatrix& A,
                                                     const std::vector<double>& b,
                                                     const std::vector<double>& x0, double rtol,
                                                     double atol, int max_iter) {
    const int n = A.n;
    if (max_iter < 0) max_iter = 10 * n;

    SolveReport rep;
    rep.method = SolveMethod::cg;

    std::vector<double> x = x0;
    std::vector<double> r(b.size()), z(b.size()), p(b.size()), Ap(b.size());

    std::vector<double> inv_diag(static_cast<std::size_t>(n), 1.0);
    for (int i = 0; i < n; ++i) {
        const double d = A.at(i, i);
        if (d != 0.0) inv_diag[static_cast<std::size_t>(i)] = 1.0 / d;
    }

    A.multiply(x, Ap);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - Ap[i];

    const double bnorm = norm2(b);
    const double target = rtol * bnorm + atol;

    double rnorm = norm2(r);
    if (rnorm <= target) {
        rep.success = true;
        rep.residual = rnorm;
        return {x, rep};
    }

    for (std::size_t i = 0; i < b.size(); ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);

    for (int it = 1; it <= max_iter; ++it) {
        A.multiply(p, Ap);
        const double pAp = dot(p, Ap);
        if (!std::isfinite(pAp) || pAp == 0.0) {
            rep.iterations = it;
            rep.residual = rnorm;
            return {x, rep};
        }
        const double alpha = rz / pAp;
        for (std::size_t i = 0; i < b.size(); ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
        }
        rnorm = norm2(r);
        rep.iterations = it;
        if (!std::isfinite(rnorm)) {
            rep.residual = rnorm;
            return {x, rep};
        }
        if (rnorm <= target) {
            rep.success = true;
            rep.residual = rnorm;
            return {x, rep};
        }
        for (std::size_t i = 0; i < b.size(); ++i) z[i] = inv_diag[i] * r[i];
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < b.size(); ++i) p[i] = z[i] + beta * p[i];
    }
    rep.residual = rnorm;
    return {x, rep};
}

std::pair<std::vector<double>, SolveReport> solve_direct(const SparseMatrix& A,
                                                         const std::vector<double>& b) {
    const int n = A.n;
    SolveReport rep;
    rep.method = SolveMethod::direct;

    // Bandwidths from the sparsity pattern.
    int kl = 0, ku = 0;
    for (int i = 0; i < n; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            const int j = A.col_idx[k];
            kl = std::max(kl, i - j);
            ku = std::max(ku, j - i);
        }
    }

    // LAPACK-style column-major band storage with kl extra rows for pivot
    // fill-in: ab(kl+ku+i-j, j) = A(i,j).
    const int ldab = 2 * kl + ku + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * static_cast<std::size_t>(n), 0.0);
    auto entry = [&](int r, int j) -> double& {
        return ab[static_cast<std::size_t>(j) * ldab + r];
    };
    for (int i = 0; i < n; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
            const int j = A.col_idx[k];
            entry(kl + ku + i - j, j) = A.values[static_cast<std::size_t>(k)];
        }
    }

    // Banded LU with partial pivoting (unblocked GBTF2 scheme).
    std::vector<int> ipiv(static_cast<std::size_t>(n));
    int ju = 0;  // last column touched by the current elimination step
    for (int j = 0; j < n; ++j) {
        const int km = std::min(kl, n - 1 - j);
        int p = 0;
        double pmax = std::abs(entry(kl + ku, j));
        for (int i = 1; i <= km; ++i) {
            const double v = std::abs(entry(kl + ku + i, j));
            if (v > pmax) {
                pmax = v;
                p = i;
            }
        }
        if (pmax == 0.0) throw SingularPivotError(j);
        ipiv[static_cast<std::size_t>(j)] = j + p;
        ju = std::max(ju, std::min(j + ku + p, n - 1));
        if (p != 0) {
            for (int col = j; col <= ju; ++col) {
                std::swap(entry(kl + ku + j - col, col), entry(kl + ku + j + p - col, col));
            }
        }
        if (km > 0) {
            const double inv_pivot = 1.0 / entry(kl + ku, j);
            for (int i = 1; i <= km; ++i) entry(kl + ku + i, j) *= inv_pivot;
            for (int col = j + 1; col <= ju; ++col) {
                const double f = entry(kl + ku + j - col, col);
                if (f != 0.0) {
                    for (int i = 1; i <= km; ++i) {
                        entry(kl + ku + j + i - col, col) -= entry(kl + ku + i, j) * f;
                    }
                }
            }
        }
    }

    // Forward substitution with the stored multipliers, then banded back solve.
    std::vector<double> x = b;
    for (int j = 0; j < n; ++j) {
        const int pj = ipiv[static_cast<std::size_t>(j)];
        if (pj != j) std::swap(x[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(pj)]);
        const int km = std::min(kl, n - 1 - j);
        for (int i = 1; i <= km; ++i) {
            x[static_cast<std::size_t>(j + i)] -= entry(kl + ku + i, j) * x[static_cast<std::size_t>(j)];
        }
    }
    const int ubw = kl + ku;  // upper bandwidth of U after pivoting
    for (int j = n - 1; j >= 0; --j) {
        const double d = entry(kl + ku, j);
        if (d == 0.0) throw SingularPivotError(j);
        const double xj = x[static_cast<std::size_t>(j)] / d;
        x[static_cast<std::size_t>(j)] = xj;
        const int imin = std::max(0, j - ubw);
        for (int i = imin; i < j; ++i) {
            x[static_cast<std::size_t>(i)] -= entry(kl + ku + i - j, j) * xj;
        }
    }

    std::vector<double> Ax;
    A.multiply(x, Ax);
    double rnorm = 0.0, xmax = 0.0, bmax = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ri = Ax[i] - b[i];
        rnorm += ri * ri;
        xmax = std::max(xmax, std::abs(x[i]));
        bmax = std::max(bmax, std::abs(b[i]));
    }
    rep.residual = std::sqrt(rnorm);
    rep.iterations = 0;
    rep.success = rep.residual <= 1e-10 * (A.inf_norm() * xmax + bmax);
    return {x, rep};
}

}  // namespace pme
