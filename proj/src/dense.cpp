#include "eqaoa/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace eqaoa {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix multiply(const CMatrix& lhs, const CMatrix& rhs) {
    if (lhs.n != rhs.n) throw std::invalid_argument("matrix multiply: size mismatch");
    CMatrix out(lhs.n);
    for (int i = 0; i < lhs.n; ++i) {
        for (int k = 0; k < lhs.n; ++k) {
            std::complex<double> lik = lhs.at(i, k);
            if (lik == std::complex<double>{0.0, 0.0}) continue;
            for (int j = 0; j < lhs.n; ++j) {
                out.at(i, j) += lik * rhs.at(k, j);
            }
        }
    }
    return out;
}

CMatrix dagger(const CMatrix& m) {
    CMatrix out(m.n);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            out.at(i, j) = std::conj(m.at(j, i));
        }
    }
    return out;
}

std::complex<double> inner_trace(const CMatrix& a, const CMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("inner_trace: size mismatch");
    std::complex<double> t{0.0, 0.0};
    for (int i = 0; i < a.n; ++i) {
        for (int k = 0; k < a.n; ++k) {
            t += std::conj(a.at(k, i)) * b.at(k, i);
        }
    }
    return t;
}

EigenSym eigensym(const std::vector<double>& m, int n) {
    if (static_cast<int>(m.size()) != n * n) {
        throw std::invalid_argument("eigensym: bad matrix size");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(m[i * n + j] - m[j * n + i]) > 1e-9) {
                throw std::invalid_argument("eigensym: matrix is not symmetric");
            }
        }
    }

    std::vector<double> a = m;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto off = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
        }
        return s;
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off() > 1e-24 * n * n; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                double app = a[p * n + p];
                double aqq = a[q * n + q];
                double theta = 0.5 * (aqq - app) / apq;
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a[k * n + p];
                    double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p * n + k];
                    double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<size_t>(k) * n + p];
                    double vkq = v[static_cast<size_t>(k) * n + q];
                    v[static_cast<size_t>(k) * n + p] = c * vkp - s * vkq;
                    v[static_cast<size_t>(k) * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    EigenSym out;
    out.n = n;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a[i * n + i];

    // Sort ascending, permuting columns alongside.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return out.values[x] < out.values[y]; });
    std::vector<double> sorted_vals(n);
    std::vector<double> sorted_vecs(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        sorted_vals[k] = out.values[order[k]];
        for (int row = 0; row < n; ++row) {
            sorted_vecs[static_cast<size_t>(row) * n + k] =
                v[static_cast<size_t>(row) * n + order[k]];
        }
    }
    out.values = std::move(sorted_vals);
    out.vectors = std::move(sorted_vecs);
    return out;
}

}  // namespace eqaoa
