#include "eqaoa/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "eqaoa/rng.hpp"

namespace eqaoa {

double StateVector::norm() const {
    double s = 0.0;
    for (const cd& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

void Params::validate() const {
    if (gammas.size() != betas.size()) {
        throw std::invalid_argument("params: gamma/beta length mismatch");
    }
    if (gammas.empty()) {
        throw std::invalid_argument("params: depth must be at least 1");
    }
}

StateVector init_state(const StartState& start, const Encoding& enc) {
    if (start.tag == StartState::Tag::Distinguished) {
        return distinguished_state(start.kind, enc);
    }
    if (static_cast<int>(start.bits.size()) != enc.total_qubits) {
        throw std::invalid_argument("basis state needs " + std::to_string(enc.total_qubits) +
                                    " bits, got " + std::to_string(start.bits.size()));
    }
    uint64_t index = 0;
    for (int q = 0; q < enc.total_qubits; ++q) {
        char c = start.bits[q];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis state bits must be 0/1");
        }
        if (c == '1') index |= uint64_t{1} << q;
    }
    StateVector s;
    s.num_qubits = enc.total_qubits;
    s.amps.assign(enc.dim(), cd{0.0, 0.0});
    s.amps[index] = 1.0;
    return s;
}

void apply_phase_separator(StateVector& s, const DiagonalObservable& h, double gamma) {
    if (s.dim() != h.dim()) {
        throw std::invalid_argument("phase separator: dimension mismatch");
    }
    // Objective values are usually small nonnegative integers; one phase table
    // then beats two trig calls per amplitude.
    constexpr int kTableCap = 4096;
    int max_int = -1;
    for (uint64_t x = 0; x < s.dim(); ++x) {
        double v = h.values[x];
        int k = static_cast<int>(v);
        if (v != static_cast<double>(k) || k < 0 || k >= kTableCap) {
            max_int = -1;
            break;
        }
        max_int = std::max(max_int, k);
    }
    if (max_int >= 0) {
        std::vector<cd> table(max_int + 1);
        for (int k = 0; k <= max_int; ++k) {
            table[k] = cd{std::cos(gamma * k), -std::sin(gamma * k)};
        }
        for (uint64_t x = 0; x < s.dim(); ++x) {
            s.amps[x] *= table[static_cast<int>(h.values[x])];
        }
        return;
    }
    for (uint64_t x = 0; x < s.dim(); ++x) {
        double phase = -gamma * h.values[x];
        s.amps[x] *= cd{std::cos(phase), std::sin(phase)};
    }
}

namespace {

// exp(-i beta X) on one qubit, across the whole register.
void apply_x_rotation_all(StateVector& s, double beta) {
    const cd c{std::cos(beta), 0.0};
    const cd ms{0.0, -std::sin(beta)};
    for (int q = 0; q < s.num_qubits; ++q) {
        const uint64_t bit = uint64_t{1} << q;
        for (uint64_t x = 0; x < s.dim(); ++x) {
            if (x & bit) continue;
            cd a0 = s.amps[x];
            cd a1 = s.amps[x | bit];
            s.amps[x] = c * a0 + ms * a1;
            s.amps[x | bit] = ms * a0 + c * a1;
        }
    }
}

// Per-qudit frame exponential as a rank-one update:
//   U = I + (e^{-i beta d} - 1) v v^T,  v = H^(x ell) e_k, entries ±1/sqrt(d).
// Exactly the identity at beta = 0, which keeps zero-extended layers inert.
void apply_qudit_phase(StateVector& s, const Encoding& enc, int unit, int frame_index,
                       double beta) {
    const int d = enc.d;
    const int shift = unit * enc.ell;
    const uint64_t unit_mask = static_cast<uint64_t>(d - 1) << shift;
    const double phase = -beta * d;
    const cd w = cd{std::cos(phase) - 1.0, std::sin(phase)} / static_cast<double>(d);

    std::vector<double> sign(d);
    for (int c = 0; c < d; ++c) {
        sign[c] = (std::popcount(static_cast<unsigned>(c & frame_index)) & 1) ? -1.0 : 1.0;
    }

    for (uint64_t base = 0; base < s.dim(); ++base) {
        if (base & unit_mask) continue;  // enumerate each qudit group once
        cd dot{0.0, 0.0};
        for (int c = 0; c < d; ++c) {
            dot += sign[c] * s.amps[base | (static_cast<uint64_t>(c) << shift)];
        }
        dot *= w;
        for (int c = 0; c < d; ++c) {
            s.amps[base | (static_cast<uint64_t>(c) << shift)] += sign[c] * dot;
        }
    }
}

}  // namespace

void apply_mixer(StateVector& s, MixerKind kind, double beta, const Encoding& enc) {
    if (s.num_qubits != enc.total_qubits) {
        throw std::invalid_argument("mixer: register size mismatch");
    }
    if (kind == MixerKind::ClassicalB) {
        apply_x_rotation_all(s, beta);
        return;
    }
    // Frame index 0 carries the nonzero reduced entry for EquivariantM; the
    // Chi placement (index 1) applies on unit 0 only.
    for (int u = 0; u < enc.num_units; ++u) {
        int frame_index = (kind == MixerKind::EquivariantChi && u == 0) ? 1 : 0;
        apply_qudit_phase(s, enc, u, frame_index, beta);
    }
}

void apply_qaoa_layers(StateVector& s, const DiagonalObservable& h, MixerKind kind,
                       const Encoding& enc, const Params& params) {
    params.validate();
    for (int i = 0; i < params.depth(); ++i) {
        apply_phase_separator(s, h, params.gammas[i]);
        apply_mixer(s, kind, params.betas[i], enc);
    }
}

StateVector run_qaoa(const ProblemSpec& spec, const DiagonalObservable& h, MixerKind kind,
                     const Params& params) {
    StateVector s = distinguished_state(kind, spec.enc);
    apply_qaoa_layers(s, h, kind, spec.enc, params);
    return s;
}

StateVector run_qaoa(const ProblemSpec& spec, MixerKind kind, const Params& params) {
    DiagonalObservable h = build_diagonal(spec);
    return run_qaoa(spec, h, kind, params);
}

std::vector<uint64_t> sample(const StateVector& s, int shots, std::mt19937_64& rng) {
    if (shots < 1) {
        throw std::invalid_argument("sample: need at least one shot");
    }
    std::vector<double> cumulative(s.dim());
    double total = 0.0;
    for (uint64_t x = 0; x < s.dim(); ++x) {
        total += std::norm(s.amps[x]);
        cumulative[x] = total;
    }
    std::vector<uint64_t> out(shots);
    for (int i = 0; i < shots; ++i) {
        double u = uniform_unit(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        out[i] = static_cast<uint64_t>(it - cumulative.begin());
    }
    return out;
}

double energy_estimate(std::span<const uint64_t> samples, const ProblemSpec& spec) {
    if (samples.empty()) {
        throw std::invalid_argument("energy estimate over an empty sample set");
    }
    double sum = 0.0;
    for (uint64_t x : samples) sum += objective_value(spec, x);
    return sum / static_cast<double>(samples.size());
}

double exact_expectation(const StateVector& s, const DiagonalObservable& h) {
    if (s.dim() != h.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    double sum = 0.0;
    for (uint64_t x = 0; x < s.dim(); ++x) {
        sum += std::norm(s.amps[x]) * h.values[x];
    }
    return sum;
}

}  // namespace eqaoa
