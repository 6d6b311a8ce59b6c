#include "eqaoa/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "eqaoa/rng.hpp"
#include "eqaoa/simulator.hpp"

namespace eqaoa {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const OptimizerSettings& settings) {
    const int dim = static_cast<int>(x0.size());
    if (dim < 1) throw std::invalid_argument("nelder_mead: empty start point");
    if (settings.max_evals < dim + 1) {
        throw std::invalid_argument("nelder_mead: max_evals below initial simplex size");
    }

    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        double v = f(std::span<const double>(x));
        ++evals;
        if (!std::isfinite(v)) {
            throw std::runtime_error("nelder_mead: objective returned a non-finite value");
        }
        return v;
    };

    std::vector<std::vector<double>> verts(dim + 1, x0);
    std::vector<double> vals(dim + 1);
    for (int i = 1; i <= dim; ++i) verts[i][i - 1] += settings.simplex_step;
    for (int i = 0; i <= dim; ++i) vals[i] = eval(verts[i]);

    auto order = [&]() {
        std::vector<int> idx(dim + 1);
        for (int i = 0; i <= dim; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> v2(dim + 1);
        std::vector<double> f2(dim + 1);
        for (int i = 0; i <= dim; ++i) {
            v2[i] = std::move(verts[idx[i]]);
            f2[i] = vals[idx[i]];
        }
        verts = std::move(v2);
        vals = std::move(f2);
    };

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;
    // A flat simplex can still be wide (two vertices straddling a minimum),
    // so convergence also requires a small simplex. A noisy objective never
    // satisfies the spread test at all; once the simplex is numerically dead
    // the run stops so callers can restart from the incumbent.
    constexpr double kConvergedDiameter = 1e-6;
    constexpr double kCollapsedDiameter = 1e-9;

    auto diameter = [&]() {
        double worst = 0.0;
        for (int i = 1; i <= dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                worst = std::max(worst, std::abs(verts[i][j] - verts[0][j]));
            }
        }
        return worst;
    };

    while (evals < settings.max_evals) {
        order();
        double spread = vals[dim] - vals[0];
        double width = diameter();
        if ((spread <= settings.convergence_tol && width <= kConvergedDiameter) ||
            width <= kCollapsedDiameter) {
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) centroid[j] += verts[i][j];
        }
        for (double& c : centroid) c /= dim;

        auto blend = [&](double coeff) {
            std::vector<double> p(dim);
            for (int j = 0; j < dim; ++j) p[j] = centroid[j] + coeff * (centroid[j] - verts[dim][j]);
            return p;
        };

        std::vector<double> reflected = blend(kReflect);
        double fr = eval(reflected);
        if (fr < vals[0]) {
            if (evals >= settings.max_evals) {
                verts[dim] = std::move(reflected);
                vals[dim] = fr;
                break;
            }
            std::vector<double> expanded = blend(kExpand);
            double fe = eval(expanded);
            if (fe < fr) {
                verts[dim] = std::move(expanded);
                vals[dim] = fe;
            } else {
                verts[dim] = std::move(reflected);
                vals[dim] = fr;
            }
        } else if (fr < vals[dim - 1]) {
            verts[dim] = std::move(reflected);
            vals[dim] = fr;
        } else {
            bool outside = fr < vals[dim];
            std::vector<double> contracted(dim);
            if (outside) {
                for (int j = 0; j < dim; ++j) {
                    contracted[j] = centroid[j] + kContract * (reflected[j] - centroid[j]);
                }
            } else {
                for (int j = 0; j < dim; ++j) {
                    contracted[j] = centroid[j] + kContract * (verts[dim][j] - centroid[j]);
                }
            }
            if (evals >= settings.max_evals) break;
            double fc = eval(contracted);
            if (fc < std::min(fr, vals[dim])) {
                verts[dim] = std::move(contracted);
                vals[dim] = fc;
            } else {
                // Shrink toward the best vertex.
                for (int i = 1; i <= dim; ++i) {
                    for (int j = 0; j < dim; ++j) {
                        verts[i][j] = verts[0][j] + kShrink * (verts[i][j] - verts[0][j]);
                    }
                    if (evals >= settings.max_evals) break;
                    vals[i] = eval(verts[i]);
                }
            }
        }
    }

    order();
    return NelderMeadResult{verts[0], vals[0], evals};
}

EnergyObjective::EnergyObjective(const ProblemSpec& spec, const DiagonalObservable& h,
                                 MixerKind kind, EnergyMode mode, int shots, uint64_t seed)
    : spec_(spec), h_(h), kind_(kind), mode_(mode), shots_(shots), seed_(seed) {
    if (mode == EnergyMode::Sampled && shots < 1) {
        throw std::invalid_argument("sampled energy needs a positive shot count");
    }
}

Params EnergyObjective::unflatten(std::span<const double> flat) {
    if (flat.empty() || flat.size() % 2 != 0) {
        throw std::invalid_argument("flat parameter vector must have even positive length");
    }
    Params p;
    for (size_t i = 0; i < flat.size(); i += 2) {
        p.betas.push_back(flat[i]);
        p.gammas.push_back(flat[i + 1]);
    }
    return p;
}

std::vector<double> EnergyObjective::flatten(const Params& params) {
    std::vector<double> flat;
    for (int i = 0; i < params.depth(); ++i) {
        flat.push_back(params.betas[i]);
        flat.push_back(params.gammas[i]);
    }
    return flat;
}

double EnergyObjective::operator()(std::span<const double> flat_params) const {
    Params params = unflatten(flat_params);
    StateVector s = distinguished_state(kind_, spec_.enc);
    apply_qaoa_layers(s, h_, kind_, spec_.enc, params);
    uint64_t eval_index = eval_counter_++;
    if (mode_ == EnergyMode::Exact) {
        return exact_expectation(s, h_);
    }
    std::mt19937_64 rng(derive_seed(seed_, 1, eval_index));
    std::vector<uint64_t> shots = sample(s, shots_, rng);
    double sum = 0.0;
    for (uint64_t x : shots) sum += h_.values[x];
    return sum / static_cast<double>(shots.size());
}

TrialRecord layerwise_run(const ProblemSpec& spec, const DiagonalObservable& h, MixerKind kind,
                          int pmax, EnergyMode mode, int shots, uint64_t seed,
                          const OptimizerSettings& settings) {
    if (pmax < 1) throw std::invalid_argument("layerwise_run: pmax must be at least 1");

    TrialRecord record;
    record.seed = seed;
    record.mode = mode;
    record.shots = shots;

    std::mt19937_64 init_rng(derive_seed(seed, 0, 0));
    double beta1 = uniform_in(init_rng, 0.0, 0.25 * std::numbers::pi);
    double gamma1 = uniform_in(init_rng, 0.0, 2.0 * std::numbers::pi);

    EnergyObjective objective(spec, h, kind, mode, shots, seed);
    auto f = [&objective](std::span<const double> x) { return objective(x); };

    std::vector<double> best{beta1, gamma1};
    for (int p = 1; p <= pmax; ++p) {
        if (p > 1) {
            best.push_back(0.0);  // identity layer: beta
            best.push_back(0.0);  // identity layer: gamma
        }
        const int dim = 2 * p;

        // Shot noise collapses a single simplex long before the budget is
        // spent; re-inflating around the incumbent until the depth budget
        // runs out recovers most of it (restarted Nelder-Mead).
        int budget = settings.max_evals;
        double depth_best = std::numeric_limits<double>::infinity();
        std::vector<double> start = best;
        while (budget >= dim + 1) {
            OptimizerSettings round = settings;
            round.max_evals = budget;
            NelderMeadResult result = nelder_mead(f, start, round);
            budget -= result.evals;
            bool improved = result.value < depth_best;
            if (improved) {
                depth_best = result.value;
                best = result.x;
            }
            start = result.x;
            if (mode == EnergyMode::Exact && !improved) break;
        }
        record.depth_energies.push_back(depth_best);
    }
    record.final_params = EnergyObjective::unflatten(best);

    // One measurement batch from the optimized state.
    StateVector s = distinguished_state(kind, spec.enc);
    apply_qaoa_layers(s, h, kind, spec.enc, record.final_params);
    std::mt19937_64 sample_rng(derive_seed(seed, 2, 0));
    record.samples = sample(s, shots > 0 ? shots : 1024, sample_rng);
    record.best_sample = record.samples.front();
    record.best_objective = h.values[record.best_sample];
    for (uint64_t x : record.samples) {
        if (h.values[x] < record.best_objective) {
            record.best_objective = h.values[x];
            record.best_sample = x;
        }
    }
    return record;
}

}  // namespace eqaoa
