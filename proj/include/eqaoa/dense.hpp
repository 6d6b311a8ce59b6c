#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace eqaoa {

/// Row-major complex square matrix; sized for gate registers, not for scale.
struct CMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    CMatrix() = default;
    explicit CMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, {0.0, 0.0}) {}

    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a[static_cast<size_t>(i) * n + j];
    }

    static CMatrix identity(int n);
};

CMatrix multiply(const CMatrix& lhs, const CMatrix& rhs);
CMatrix dagger(const CMatrix& m);

// tr(A^dagger B)
std::complex<double> inner_trace(const CMatrix& a, const CMatrix& b);

/// Eigendecomposition of a real symmetric matrix (cyclic Jacobi).
/// vectors is column-major: column k is the eigenvector of values[k];
/// eigenvalues are sorted ascending.
struct EigenSym {
    std::vector<double> values;
    std::vector<double> vectors;
    int n = 0;

    double vec(int row, int k) const { return vectors[static_cast<size_t>(row) * n + k]; }
};

EigenSym eigensym(const std::vector<double>& m, int n);

}  // namespace eqaoa
