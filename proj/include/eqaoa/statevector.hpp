#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace eqaoa {

using cd = std::complex<double>;

/// Dense amplitude vector over 2^num_qubits basis states, unit norm.
struct StateVector {
    int num_qubits = 0;
    std::vector<cd> amps;

    static StateVector zero_state(int num_qubits) {
        StateVector s;
        s.num_qubits = num_qubits;
        s.amps.assign(uint64_t{1} << num_qubits, cd{0.0, 0.0});
        s.amps[0] = 1.0;
        return s;
    }

    uint64_t dim() const { return amps.size(); }
    double norm() const;
};

/// One (gamma, beta) pair per layer.
struct Params {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }
    void validate() const;  // equal lengths, depth >= 1

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace eqaoa
