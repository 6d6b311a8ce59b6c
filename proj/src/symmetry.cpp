#include "eqaoa/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "eqaoa/dense.hpp"
#include "eqaoa/simulator.hpp"

namespace eqaoa {

Permutation Permutation::identity(int d) {
    Permutation p;
    p.images.resize(d);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::compose(const Permutation& then) const {
    if (d() != then.d()) throw std::invalid_argument("composing permutations of unequal degree");
    Permutation out;
    out.images.resize(d());
    for (int c = 0; c < d(); ++c) out.images[c] = then.images[images[c]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images.resize(d());
    for (int c = 0; c < d(); ++c) out.images[images[c]] = c;
    return out;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int im : images) {
        if (im < 0 || im >= d() || seen[im]) return false;
        seen[im] = true;
    }
    return true;
}

Permutation cyclic_shift(int d) {
    Permutation p;
    p.images.resize(d);
    for (int c = 0; c < d; ++c) p.images[c] = (c + 1) % d;
    return p;
}

std::vector<Permutation> all_permutations(int d) {
    if (d > 8) throw std::invalid_argument("permutation enumeration capped at d = 8");
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{images});
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

uint64_t permute_basis_index(uint64_t x, const Permutation& sigma, const Encoding& enc) {
    uint64_t y = 0;
    for (int u = 0; u < enc.num_units; ++u) {
        uint64_t color = static_cast<uint64_t>(sigma.images[enc.color_of(x, u)]);
        y |= color << (u * enc.ell);
    }
    return y;
}

void apply_color_permutation(StateVector& s, const Permutation& sigma, const Encoding& enc) {
    if (s.num_qubits != enc.total_qubits || sigma.d() != enc.d) {
        throw std::invalid_argument("permutation action: dimension mismatch");
    }
    std::vector<cd> out(s.dim());
    for (uint64_t x = 0; x < s.dim(); ++x) {
        out[permute_basis_index(x, sigma, enc)] = s.amps[x];
    }
    s.amps = std::move(out);
}

std::vector<double> permutation_matrix(const Permutation& sigma) {
    const int d = sigma.d();
    std::vector<double> p(static_cast<size_t>(d) * d, 0.0);
    for (int c = 0; c < d; ++c) p[static_cast<size_t>(sigma.images[c]) * d + c] = 1.0;
    return p;
}

bool commutes(const std::vector<double>& op, const Permutation& sigma, double tol) {
    const int d = sigma.d();
    if (static_cast<int>(op.size()) != d * d) {
        throw std::invalid_argument("commutes: operator size mismatch");
    }
    // (A P)_{ij} = A_{i, sigma^{-1}(j)}... cheaper by index juggling:
    // column j of P is e_{sigma(j)}, row i of P is e_{sigma^{-1}(i)}.
    Permutation inv = sigma.inverse();
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double ap = op[static_cast<size_t>(i) * d + sigma.images[j]];
            double pa = op[static_cast<size_t>(inv.images[i]) * d + j];
            worst = std::max(worst, std::abs(ap - pa));
        }
    }
    return worst <= tol;
}

bool commutes(const DiagonalObservable& h, const Permutation& sigma, const Encoding& enc) {
    for (uint64_t x = 0; x < h.dim(); ++x) {
        if (h.values[x] != h.values[permute_basis_index(x, sigma, enc)]) return false;
    }
    return true;
}

std::vector<Permutation> centralizer_in_sd(const std::vector<double>& op, int d, double tol) {
    std::vector<Permutation> found;
    for (const Permutation& sigma : all_permutations(d)) {
        if (commutes(op, sigma, tol)) found.push_back(sigma);
    }
    return found;
}

namespace {

// e^{-2 pi i r / d}, exact on quarter turns so that pure components project
// to exact zeros elsewhere.
cd root_of_unity(long r, int d) {
    r = ((r % d) + d) % d;
    if ((4 * r) % d == 0) {
        switch (((4 * r) / d) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, -1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, 1.0};
        }
    }
    double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / d;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::vector<double> zd_component_norms(const StateVector& s, const Encoding& enc) {
    const int d = enc.d;
    const Permutation g = cyclic_shift(d);

    // Orbit images t_k = phi(g)^k s, then P_j s = (1/d) sum_k w^{-jk} t_k.
    std::vector<StateVector> shifted;
    shifted.reserve(d);
    shifted.push_back(s);
    for (int k = 1; k < d; ++k) {
        StateVector next = shifted.back();
        apply_color_permutation(next, g, enc);
        shifted.push_back(std::move(next));
    }

    std::vector<double> norms(d, 0.0);
    for (int j = 0; j < d; ++j) {
        double sq = 0.0;
        for (uint64_t x = 0; x < s.dim(); ++x) {
            cd acc{0.0, 0.0};
            for (int k = 0; k < d; ++k) {
                acc += root_of_unity(static_cast<long>(j) * k, d) * shifted[k].amps[x];
            }
            sq += std::norm(acc / static_cast<double>(d));
        }
        norms[j] = std::sqrt(sq);
    }
    return norms;
}

double check_qaoa_invariance(const ProblemSpec& spec, MixerKind kind, const Params& params) {
    StateVector s = distinguished_state(kind, spec.enc);
    if (params.depth() > 0) {
        DiagonalObservable h = build_diagonal(spec);
        apply_qaoa_layers(s, h, kind, spec.enc, params);
    }
    const int home = kind == MixerKind::EquivariantChi ? spec.enc.d / 2 : 0;
    std::vector<double> norms = zd_component_norms(s, spec.enc);
    double leak = 0.0;
    for (int j = 0; j < spec.enc.d; ++j) {
        if (j != home) leak += norms[j] * norms[j];
    }
    return leak;
}

namespace {

// Strong connectivity of the sparsity digraph by forward and reverse reach.
bool strongly_connected(const std::vector<double>& m, int n) {
    if (n == 0) return false;
    auto reachable = [&](bool transpose) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                double entry = transpose ? m[static_cast<size_t>(w) * n + v]
                                         : m[static_cast<size_t>(v) * n + w];
                if (entry != 0.0 && !seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    if (n == 1) return m[0] != 0.0;
    return reachable(false) && reachable(true);
}

}  // namespace

PFReport perron_frobenius_check(const std::vector<double>& m, int n) {
    if (static_cast<int>(m.size()) != n * n) {
        throw std::invalid_argument("pf check: bad matrix size");
    }
    if (n > (1 << 12)) {
        throw std::invalid_argument("pf check capped at dimension 4096");
    }
    PFReport report;
    report.nonnegative = std::all_of(m.begin(), m.end(), [](double e) { return e >= -1e-12; });
    report.irreducible = strongly_connected(m, n);

    EigenSym eig = eigensym(m, n);
    const int top = n - 1;
    report.spectral_gap = n > 1 ? eig.values[top] - eig.values[top - 1] : 0.0;

    // Sign-normalize on the largest entry, then ask for strict positivity.
    double ref = 0.0;
    for (int i = 0; i < n; ++i) {
        if (std::abs(eig.vec(i, top)) > std::abs(ref)) ref = eig.vec(i, top);
    }
    double sign = ref >= 0 ? 1.0 : -1.0;
    report.extremal_positive = true;
    for (int i = 0; i < n; ++i) {
        if (sign * eig.vec(i, top) < 1e-12) {
            report.extremal_positive = false;
            break;
        }
    }
    return report;
}

std::vector<double> full_mixer_matrix(MixerKind kind, const Encoding& enc) {
    if (enc.total_qubits > 12) {
        throw std::invalid_argument("full mixer matrix capped at 12 qubits");
    }
    const uint64_t dim = enc.dim();
    std::vector<double> out(dim * dim, 0.0);
    const int d = enc.d;

    std::vector<double> b = single_qudit_b_matrix(d);
    std::vector<double> hm;
    std::vector<double> hchi;
    if (kind != MixerKind::ClassicalB) {
        hm = single_qudit_matrix(MixerKind::EquivariantM, d).matrix;
        if (kind == MixerKind::EquivariantChi) {
            hchi = single_qudit_matrix(MixerKind::EquivariantChi, d).matrix;
        }
    }

    for (int u = 0; u < enc.num_units; ++u) {
        const std::vector<double>* term = &b;
        if (kind == MixerKind::EquivariantM) term = &hm;
        if (kind == MixerKind::EquivariantChi) term = (u == 0) ? &hchi : &hm;
        const int shift = u * enc.ell;
        const uint64_t unit_mask = static_cast<uint64_t>(d - 1) << shift;
        for (uint64_t x = 0; x < dim; ++x) {
            const uint64_t rest = x & ~unit_mask;
            const int cx = enc.color_of(x, u);
            for (int cy = 0; cy < d; ++cy) {
                double e = (*term)[static_cast<size_t>(cx) * d + cy];
                if (e != 0.0) {
                    uint64_t y = rest | (static_cast<uint64_t>(cy) << shift);
                    out[x * dim + y] += e;
                }
            }
        }
    }
    return out;
}

}  // namespace eqaoa
