#include "eqaoa/mixers.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace eqaoa {

MixerKind mixer_from_name(std::string_view name) {
    if (name == "b") return MixerKind::ClassicalB;
    if (name == "hm") return MixerKind::EquivariantM;
    if (name == "hchi") return MixerKind::EquivariantChi;
    throw std::invalid_argument("unknown mixer '" + std::string(name) +
                                "'; valid names: b hm hchi");
}

std::string_view mixer_name(MixerKind kind) {
    switch (kind) {
        case MixerKind::ClassicalB: return "b";
        case MixerKind::EquivariantM: return "hm";
        case MixerKind::EquivariantChi: return "hchi";
    }
    throw std::logic_error("bad mixer kind");
}

namespace {

int ell_of(int d) {
    if (d < 2 || (d & (d - 1)) != 0) {
        throw std::invalid_argument("mixer dimension must be a power of two, got " +
                                    std::to_string(d));
    }
    return std::countr_zero(static_cast<unsigned>(d));
}

// Entry (i,j) of the ell-fold Hadamard, times sqrt(d): (-1)^popcount(i & j).
double hadamard_sign(unsigned i, unsigned j) {
    return (std::popcount(i & j) & 1) ? -1.0 : 1.0;
}

}  // namespace

SingleQuditMixer single_qudit_matrix(MixerKind kind, int d) {
    if (kind == MixerKind::ClassicalB) {
        throw std::invalid_argument("ClassicalB has no single post-frame diagonal; "
                                    "use single_qudit_b_matrix");
    }
    ell_of(d);
    SingleQuditMixer m;
    m.d = d;
    m.matrix.assign(static_cast<size_t>(d) * d, 0.0);
    const double diag = 0.5 * (d - 1) * (d - 2);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) {
                m.matrix[i * d + j] = diag;
            } else if (kind == MixerKind::EquivariantM) {
                m.matrix[i * d + j] = 1.0;
            } else {
                m.matrix[i * d + j] = ((i + j) & 1) ? -1.0 : 1.0;
            }
        }
    }

    // Conjugate by H^(x ell) explicitly and insist the result is diagonal.
    std::vector<double> conj(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double sum = 0.0;
            for (int k = 0; k < d; ++k) {
                for (int l = 0; l < d; ++l) {
                    sum += hadamard_sign(i, k) * m.matrix[k * d + l] * hadamard_sign(l, j);
                }
            }
            conj[i * d + j] = sum / d;
        }
    }
    m.frame_diagonal.resize(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) {
                m.frame_diagonal[i] = conj[i * d + j];
            } else if (std::abs(conj[i * d + j]) > 1e-12) {
                throw std::logic_error("mixer is not diagonal in the Hadamard frame");
            }
        }
    }

    const double scalar = diag - 1.0;
    m.reduced_diagonal.resize(d);
    int hits = 0;
    for (int i = 0; i < d; ++i) {
        m.reduced_diagonal[i] = m.frame_diagonal[i] - scalar;
        if (std::abs(m.reduced_diagonal[i] - d) < 1e-9) {
            m.distinguished_index = i;
            ++hits;
        } else {
            m.reduced_diagonal[i] = 0.0;  // snap the numerically-zero entries
        }
    }
    if (hits != 1) {
        throw std::logic_error("expected exactly one distinguished frame entry");
    }
    m.reduced_diagonal[m.distinguished_index] = static_cast<double>(d);
    return m;
}

std::vector<double> single_qudit_b_matrix(int d) {
    int ell = ell_of(d);
    std::vector<double> b(static_cast<size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int bit = 0; bit < ell; ++bit) {
            b[i * d + (i ^ (1 << bit))] = 1.0;
        }
    }
    return b;
}

StateVector distinguished_state(MixerKind kind, const Encoding& enc) {
    StateVector s;
    s.num_qubits = enc.total_qubits;
    s.amps.resize(enc.dim());
    const double amp = std::pow(2.0, -0.5 * enc.total_qubits);
    if (kind == MixerKind::EquivariantChi) {
        for (uint64_t x = 0; x < s.dim(); ++x) {
            s.amps[x] = (x & 1) ? -amp : amp;  // sign from unit 0's color parity
        }
    } else {
        for (uint64_t x = 0; x < s.dim(); ++x) {
            s.amps[x] = amp;
        }
    }
    return s;
}

ExtremalReport verify_extremal(MixerKind kind, const Encoding& enc) {
    if (enc.total_qubits > 12) {
        throw std::runtime_error("verify_extremal: register larger than 12 qubits");
    }

    // Per-unit frame diagonals and the frame index of each unit's top entry.
    // For ClassicalB the per-qudit frame diagonal of sum_i Z_i is
    // sum of (1 - 2*bit_i), maximal at frame index 0.
    const int d = enc.d;
    std::vector<std::vector<double>> unit_diag(enc.num_units);
    for (int u = 0; u < enc.num_units; ++u) {
        MixerKind unit_kind = kind;
        if (kind == MixerKind::EquivariantChi && u > 0) unit_kind = MixerKind::EquivariantM;
        if (unit_kind == MixerKind::ClassicalB) {
            std::vector<double> diag(d);
            for (int k = 0; k < d; ++k) {
                diag[k] = enc.ell - 2 * std::popcount(static_cast<unsigned>(k));
            }
            unit_diag[u] = std::move(diag);
        } else {
            unit_diag[u] = single_qudit_matrix(unit_kind, d).frame_diagonal;
        }
    }

    // Spectrum = all sums of one frame entry per unit; frame index tuples are
    // exactly the basis indices of the register.
    double best = -1e300, second = -1e300;
    uint64_t best_index = 0;
    for (uint64_t x = 0; x < enc.dim(); ++x) {
        double sum = 0.0;
        for (int u = 0; u < enc.num_units; ++u) {
            sum += unit_diag[u][enc.color_of(x, u)];
        }
        if (sum > best) {
            second = best;
            best = sum;
            best_index = x;
        } else if (sum > second) {
            second = sum;
        }
    }

    ExtremalReport report;
    report.extremal_value = best;
    report.gap = best - second;
    report.unique = report.gap > 1e-9;

    // Extremal eigenvector: per-qubit Hadamard columns of the frame index.
    // Entry x gets sign (-1)^popcount(x & best_index) over sqrt(dim).
    StateVector expected = distinguished_state(kind, enc);
    const double amp = std::pow(2.0, -0.5 * enc.total_qubits);
    double err_plus = 0.0, err_minus = 0.0;
    for (uint64_t x = 0; x < enc.dim(); ++x) {
        double v = (std::popcount(x & best_index) & 1) ? -amp : amp;
        err_plus = std::max(err_plus, std::abs(v - expected.amps[x].real()));
        err_minus = std::max(err_minus, std::abs(v + expected.amps[x].real()));
    }
    report.match_error = std::min(err_plus, err_minus);
    return report;
}

}  // namespace eqaoa
