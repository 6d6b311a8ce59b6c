#pragma once

// Test-only reference computations, kept independent of the library's fast
// paths: dense matrix exponentials through the Jacobi eigensolver and
// column-probe reconstructions of simulator actions.

#include <complex>
#include <cstdint>
#include <vector>

#include "eqaoa/dense.hpp"
#include "eqaoa/statevector.hpp"

namespace eqaoa::testing {

// exp(-i t M) for real symmetric M via full eigendecomposition.
inline CMatrix dense_hermitian_exponential(const std::vector<double>& m, int n, double t) {
    EigenSym eig = eigensym(m, n);
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::complex<double> sum{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                double phase = -t * eig.values[k];
                sum += std::complex<double>{std::cos(phase), std::sin(phase)} * eig.vec(i, k) *
                       eig.vec(j, k);
            }
            out.at(i, j) = sum;
        }
    }
    return out;
}

// Matrix of any linear statevector action, one basis column at a time.
template <class Action>
CMatrix matrix_of_action(int num_qubits, Action&& act) {
    const uint64_t dim = uint64_t{1} << num_qubits;
    CMatrix out(static_cast<int>(dim));
    for (uint64_t col = 0; col < dim; ++col) {
        StateVector s;
        s.num_qubits = num_qubits;
        s.amps.assign(dim, cd{0.0, 0.0});
        s.amps[col] = 1.0;
        act(s);
        for (uint64_t row = 0; row < dim; ++row) {
            out.at(static_cast<int>(row), static_cast<int>(col)) = s.amps[row];
        }
    }
    return out;
}

inline double max_entry_distance(const CMatrix& a, const CMatrix& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) {
        worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    }
    return worst;
}

}  // namespace eqaoa::testing
