#pragma once

#include <random>
#include <span>
#include <string_view>

#include "eqaoa/mixers.hpp"
#include "eqaoa/objective.hpp"
#include "eqaoa/statevector.hpp"

namespace eqaoa {

/// Initial state selector: a mixer's distinguished state, or a computational
/// basis state for warm-start experiments.
struct StartState {
    enum class Tag { Distinguished, Basis };
    Tag tag = Tag::Distinguished;
    MixerKind kind = MixerKind::EquivariantM;
    std::string bits;  // qubit 0 first

    static StartState distinguished(MixerKind k) { return {Tag::Distinguished, k, {}}; }
    static StartState basis(std::string bits01) {
        return {Tag::Basis, MixerKind::EquivariantM, std::move(bits01)};
    }
};

StateVector init_state(const StartState& start, const Encoding& enc);

// amp[x] *= exp(-i * gamma * H[x])
void apply_phase_separator(StateVector& s, const DiagonalObservable& h, double gamma);

// ClassicalB: the rotation cos(beta) I - i sin(beta) X on every qubit.
// EquivariantM / EquivariantChi: per qudit, the Hadamard-frame diagonal
// exp(-i beta * reduced_diagonal); the Chi placement applies to unit 0 only.
void apply_mixer(StateVector& s, MixerKind kind, double beta, const Encoding& enc);

// Layers i = 1..p: phase separator with gamma_i, then mixer with beta_i.
void apply_qaoa_layers(StateVector& s, const DiagonalObservable& h, MixerKind kind,
                       const Encoding& enc, const Params& params);

// Full run from the mixer's distinguished state.
StateVector run_qaoa(const ProblemSpec& spec, const DiagonalObservable& h, MixerKind kind,
                     const Params& params);
StateVector run_qaoa(const ProblemSpec& spec, MixerKind kind, const Params& params);

// m independent draws from |amp|^2, reproducible from the generator state.
std::vector<uint64_t> sample(const StateVector& s, int shots, std::mt19937_64& rng);

// Mean objective over measured strings.
double energy_estimate(std::span<const uint64_t> samples, const ProblemSpec& spec);

// sum_x |amp[x]|^2 H[x]
double exact_expectation(const StateVector& s, const DiagonalObservable& h);

}  // namespace eqaoa
