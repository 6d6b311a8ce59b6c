#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "eqaoa/mixers.hpp"
#include "eqaoa/objective.hpp"
#include "eqaoa/statevector.hpp"

namespace eqaoa {

struct OptimizerSettings {
    int max_evals = 300;          // per depth, counting the initial simplex
    double simplex_step = 1.0;    // initial displacement per coordinate
    double convergence_tol = 1e-8;  // stop when the simplex value spread drops below
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evals = 0;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 0.5, shrink
// 0.5). Returns the best simplex vertex; never worse than f(x0). Non-finite
// objective values abort with a diagnostic.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const OptimizerSettings& settings);

enum class EnergyMode { Exact, Sampled };

/// The energy landscape at a fixed depth: exact expectation, or the mean over
/// m fresh shots with a per-evaluation derived seed. Parameters are flattened
/// as interleaved pairs [beta_1, gamma_1, beta_2, gamma_2, ...].
class EnergyObjective {
public:
    EnergyObjective(const ProblemSpec& spec, const DiagonalObservable& h, MixerKind kind,
                    EnergyMode mode, int shots, uint64_t seed);

    double operator()(std::span<const double> flat_params) const;
    uint64_t evaluations() const { return eval_counter_; }

    static Params unflatten(std::span<const double> flat);
    static std::vector<double> flatten(const Params& params);

private:
    const ProblemSpec& spec_;
    const DiagonalObservable& h_;
    MixerKind kind_;
    EnergyMode mode_;
    int shots_;
    uint64_t seed_;
    mutable uint64_t eval_counter_ = 0;
};

/// One independent campaign trial.
struct TrialRecord {
    uint64_t seed = 0;
    std::vector<double> depth_energies;  // E_1 .. E_pmax
    Params final_params;
    std::vector<uint64_t> samples;  // final-state measurement
    uint64_t best_sample = 0;
    double best_objective = 0.0;
    EnergyMode mode = EnergyMode::Sampled;
    int shots = 0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// The layer-wise protocol: draw (beta_1, gamma_1) uniformly from
// [0, pi/4] x [0, 2 pi], then for each depth p optimize all 2p parameters
// starting from the zero-extended previous optimum and record E_p. Ends with
// one measurement batch from the optimized final state.
TrialRecord layerwise_run(const ProblemSpec& spec, const DiagonalObservable& h, MixerKind kind,
                          int pmax, EnergyMode mode, int shots, uint64_t seed,
                          const OptimizerSettings& settings);

}  // namespace eqaoa
