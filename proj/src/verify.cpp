#include "eqaoa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "eqaoa/circuits.hpp"
#include "eqaoa/graph.hpp"
#include "eqaoa/mixers.hpp"
#include "eqaoa/objective.hpp"
#include "eqaoa/rng.hpp"
#include "eqaoa/simulator.hpp"
#include "eqaoa/symmetry.hpp"
#include "json.hpp"

namespace eqaoa {

bool VerifyReport::all_pass() const {
    for (const VerifyCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

namespace {

void add(VerifyReport& report, const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back(VerifyCheck{name, pass, detail});
}

}  // namespace

VerifyReport run_verification() {
    VerifyReport report;
    std::mt19937_64 rng(0x5eedULL);

    // Centralizer orders at d = 4.
    {
        auto b_central = centralizer_in_sd(single_qudit_b_matrix(4), 4);
        bool closed = true;
        for (const Permutation& p : b_central) {
            for (const Permutation& q : b_central) {
                Permutation pq = p.compose(q);
                if (std::find(b_central.begin(), b_central.end(), pq) == b_central.end()) {
                    closed = false;
                }
            }
            if (std::find(b_central.begin(), b_central.end(), p.inverse()) == b_central.end()) {
                closed = false;
            }
        }
        add(report, "centralizer_b_d4", b_central.size() == 8 && closed,
            "order " + std::to_string(b_central.size()) + ", subgroup-closed: " +
                (closed ? "yes" : "no"));

        auto m_central = centralizer_in_sd(single_qudit_matrix(MixerKind::EquivariantM, 4).matrix, 4);
        add(report, "centralizer_hm_d4", m_central.size() == 24,
            "order " + std::to_string(m_central.size()));
    }

    // Commutation relations on single qudits.
    {
        auto hm = single_qudit_matrix(MixerKind::EquivariantM, 4).matrix;
        bool all = true;
        for (const Permutation& sigma : all_permutations(4)) {
            all = all && commutes(hm, sigma, 1e-10);
        }
        add(report, "hm_commutes_s4", all, all ? "all 24 elements" : "commutator found");

        auto hchi = single_qudit_matrix(MixerKind::EquivariantChi, 4).matrix;
        bool chi_cyclic = commutes(hchi, cyclic_shift(4), 1e-10);
        add(report, "hchi_commutes_shift", chi_cyclic, chi_cyclic ? "ok" : "commutator found");

        Permutation swap01 = Permutation::identity(4);
        std::swap(swap01.images[0], swap01.images[1]);
        bool b_fails = !commutes(single_qudit_b_matrix(4), swap01, 1e-10);
        add(report, "b_breaks_transposition", b_fails,
            b_fails ? "B does not commute with (0 1)" : "unexpected commutation");
    }

    // phi(g)|psi> = -|psi>.
    {
        Encoding enc = Encoding::make(2, 1);
        StateVector psi = distinguished_state(MixerKind::EquivariantChi, enc);
        StateVector shifted = psi;
        apply_color_permutation(shifted, cyclic_shift(4), enc);
        double err = 0.0;
        for (uint64_t x = 0; x < psi.dim(); ++x) {
            err = std::max(err, std::abs(shifted.amps[x] + psi.amps[x]));
        }
        std::ostringstream os;
        os << "max deviation " << err;
        add(report, "shift_negates_psi", err <= 1e-12, os.str());
    }

    // Cyclic eigenspace dimensions via projector traces.
    {
        bool ok = true;
        std::string detail;
        for (int n : {1, 2}) {
            Encoding enc = Encoding::make(2, n);
            const int d = enc.d;
            const double expected = std::pow(static_cast<double>(d), n - 1);
            // tr P_j = (1/d) sum_k w^{-jk} tr phi(g)^k, via basis enumeration.
            Permutation g = cyclic_shift(d);
            std::vector<Permutation> powers{Permutation::identity(d)};
            for (int k = 1; k < d; ++k) powers.push_back(powers.back().compose(g));
            for (int j = 0; j < d && ok; ++j) {
                std::complex<double> trace{0.0, 0.0};
                for (int k = 0; k < d; ++k) {
                    long fixed = 0;
                    for (uint64_t x = 0; x < enc.dim(); ++x) {
                        fixed += permute_basis_index(x, powers[k], enc) == x;
                    }
                    double angle = -2.0 * std::numbers::pi * j * k / d;
                    trace += std::complex<double>{std::cos(angle), std::sin(angle)} *
                             static_cast<double>(fixed);
                }
                trace /= static_cast<double>(d);
                ok = ok && std::abs(trace.real() - expected) < 1e-9 &&
                     std::abs(trace.imag()) < 1e-9;
            }
            detail += "n=" + std::to_string(n) + " rank " + std::to_string(long(expected)) + "; ";
        }
        add(report, "zd_eigenspace_ranks", ok, detail);
    }

    // Perron-Frobenius reports.
    {
        Encoding enc = Encoding::make(2, 2);
        PFReport pf = perron_frobenius_check(full_mixer_matrix(MixerKind::EquivariantM, enc),
                                             static_cast<int>(enc.dim()));
        bool ok = pf.nonnegative && pf.irreducible && pf.extremal_positive && pf.spectral_gap > 0;
        std::ostringstream os;
        os << "nonnegative=" << pf.nonnegative << " irreducible=" << pf.irreducible
           << " positive=" << pf.extremal_positive << " gap=" << pf.spectral_gap;
        add(report, "pf_full_hm_n2_d4", ok, os.str());

        PFReport chi = perron_frobenius_check(single_qudit_matrix(MixerKind::EquivariantChi, 4).matrix, 4);
        add(report, "pf_hchi_not_nonnegative", !chi.nonnegative,
            chi.nonnegative ? "unexpectedly nonnegative" : "nonnegative=false as required");
    }

    // Circuit blocks against the dense gate product.
    {
        double beta = 0.7031;
        CMatrix chain = unitary_of(zz_chain(2, {0, 1}, beta));
        CMatrix direct(4);
        for (int x = 0; x < 4; ++x) {
            double z = (x == 0 || x == 3) ? 1.0 : -1.0;
            direct.at(x, x) = cd{std::cos(beta * z), -std::sin(beta * z)};
        }
        add(report, "zz_chain_2q", equivalent_up_to_phase(chain, direct, 1e-10), "");

        bool mix_ok = true;
        for (MixerKind kind : {MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
            for (int ell : {2, 3}) {
                Encoding enc = Encoding::make(ell, 1);
                std::vector<int> qubits;
                for (int i = 0; i < ell; ++i) qubits.push_back(i);
                CMatrix block = unitary_of(mixer_block(kind, ell, qubits, beta));
                CMatrix sim(1 << ell);
                for (uint64_t col = 0; col < enc.dim(); ++col) {
                    StateVector s;
                    s.num_qubits = enc.total_qubits;
                    s.amps.assign(enc.dim(), cd{0.0, 0.0});
                    s.amps[col] = 1.0;
                    apply_mixer(s, kind, beta, enc);
                    for (uint64_t row = 0; row < enc.dim(); ++row) {
                        sim.at(static_cast<int>(row), static_cast<int>(col)) = s.amps[row];
                    }
                }
                mix_ok = mix_ok && equivalent_up_to_phase(block, sim, 1e-9);
            }
        }
        add(report, "mixer_blocks_match_simulator", mix_ok, "ell 2 and 3, both mixers");

        ProblemSpec path = ProblemSpec::edge_coloring(Graph(3, {{0, 1}, {1, 2}}), 2);
        double gamma = 1.234;
        CMatrix sep = unitary_of(phase_separator_circuit(path, gamma));
        DiagonalObservable h = build_diagonal(path);
        CMatrix diag(static_cast<int>(h.dim()));
        for (uint64_t x = 0; x < h.dim(); ++x) {
            diag.at(static_cast<int>(x), static_cast<int>(x)) =
                cd{std::cos(gamma * h.values[x]), -std::sin(gamma * h.values[x])};
        }
        add(report, "separator_matches_diagonal", equivalent_up_to_phase(sep, diag, 1e-9), "");
    }

    // Subspace preservation over a short run on gamma1.
    {
        ProblemSpec spec = ProblemSpec::edge_coloring(builtin_graph("gamma1"), 2);
        bool ok = true;
        double worst = 0.0;
        for (MixerKind kind : {MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
            Params params;
            for (int i = 0; i < 3; ++i) {
                params.gammas.push_back(uniform_in(rng, 0.0, 2.0 * std::numbers::pi));
                params.betas.push_back(uniform_in(rng, 0.0, std::numbers::pi));
            }
            double leak = check_qaoa_invariance(spec, kind, params);
            worst = std::max(worst, leak);
            ok = ok && leak <= 1e-10;
        }
        std::ostringstream os;
        os << "worst leakage " << worst;
        add(report, "qaoa_subspace_preservation", ok, os.str());
    }

    return report;
}

std::string verify_to_json_text(const VerifyReport& report) {
    nlohmann::json j;
    j["all_pass"] = report.all_pass();
    j["checks"] = nlohmann::json::array();
    for (const VerifyCheck& c : report.checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
}

}  // namespace eqaoa
