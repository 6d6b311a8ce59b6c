#include <stdexcept>
#include <bit>
#include <numbers>
#include <random>

#include "doctest.h"
#include "eqaoa/circuits.hpp"
#include "eqaoa/rng.hpp"
#include "eqaoa/simulator.hpp"
#include "oracles.hpp"

using namespace eqaoa;

TEST_SUITE_BEGIN("circuits");

TEST_CASE("zz_chain") {
    SUBCASE("two qubits give the textbook diagonal") {
        double beta = 0.37;
        CMatrix u = unitary_of(zz_chain(2, {0, 1}, beta));
        CMatrix expected(4);
        for (int x = 0; x < 4; ++x) {
            double z = (x == 0 || x == 3) ? 1.0 : -1.0;
            expected.at(x, x) = cd{std::cos(beta * z), -std::sin(beta * z)};
        }
        CHECK(equivalent_up_to_phase(u, expected, 1e-10));
        // and with no freedom used: the chain realizes it exactly
        CHECK(testing::max_entry_distance(u, expected) <= 1e-12);
    }

    SUBCASE("four qubits match the dense exponential") {
        double beta = 1.21;
        CMatrix u = unitary_of(zz_chain(4, {0, 1, 2, 3}, beta));
        const int dim = 16;
        CMatrix expected(dim);
        for (int x = 0; x < dim; ++x) {
            double z = std::popcount(static_cast<unsigned>(x)) % 2 == 0 ? 1.0 : -1.0;
            expected.at(x, x) = cd{std::cos(beta * z), -std::sin(beta * z)};
        }
        CHECK(equivalent_up_to_phase(u, expected, 1e-10));
    }

    SUBCASE("beta = 0 is the identity") {
        CMatrix u = unitary_of(zz_chain(3, {0, 2}, 0.0));
        CHECK(testing::max_entry_distance(u, CMatrix::identity(8)) <= 1e-12);
    }

    SUBCASE("gate counts: 2(k-1) CX and one RZ") {
        for (int k : {2, 3, 4, 5}) {
            std::vector<int> qubits;
            for (int i = 0; i < k; ++i) qubits.push_back(i);
            GateSequence seq = zz_chain(k, qubits, 0.5);
            int cx = 0, rz = 0;
            for (const Gate& g : seq.gates) {
                cx += g.kind == GateKind::CX;
                rz += g.kind == GateKind::RZ;
            }
            CHECK(cx == 2 * (k - 1));
            CHECK(rz == 1);
        }
    }

    SUBCASE("fewer than two qubits rejected") {
        CHECK_THROWS_AS(zz_chain(2, {0}, 0.3), std::invalid_argument);
    }
}

TEST_CASE("mixer_block") {
    SUBCASE("ell = 2 EquivariantM equals (HxH) diag(e^{-4ib},1,1,1) (HxH)") {
        double beta = 0.81;
        CMatrix u = unitary_of(mixer_block(MixerKind::EquivariantM, 2, {0, 1}, beta));
        Encoding enc = Encoding::make(2, 1);
        CMatrix sim = testing::matrix_of_action(
            2, [&](StateVector& s) { apply_mixer(s, MixerKind::EquivariantM, beta, enc); });
        CHECK(equivalent_up_to_phase(u, sim, 1e-10));
    }

    SUBCASE("ell = 3 phase is -8 beta") {
        double beta = 0.43;
        GateSequence seq = mixer_block(MixerKind::EquivariantM, 3, {0, 1, 2}, beta);
        bool found = false;
        for (const Gate& g : seq.gates) {
            if (g.kind == GateKind::CPhase) {
                CHECK(g.angle == doctest::Approx(-8.0 * beta));
                CHECK(g.qubits.size() == 3);
                found = true;
            }
        }
        CHECK(found);
        Encoding enc = Encoding::make(3, 1);
        CMatrix sim = testing::matrix_of_action(
            3, [&](StateVector& s) { apply_mixer(s, MixerKind::EquivariantM, beta, enc); });
        CHECK(equivalent_up_to_phase(unitary_of(seq), sim, 1e-10));
    }

    SUBCASE("Chi blocks leave the sign qubit out of the X conjugation") {
        double beta = 0.66;
        GateSequence seq = mixer_block(MixerKind::EquivariantChi, 2, {0, 1}, beta);
        int h = 0, x = 0, phases = 0;
        for (const Gate& g : seq.gates) {
            h += g.kind == GateKind::H;
            x += g.kind == GateKind::X;
            phases += g.kind == GateKind::CPhase || g.kind == GateKind::RZ;
        }
        CHECK(h == 4);
        CHECK(x == 2);  // one conjugating pair, qubit 1 only
        CHECK(phases == 1);
        Encoding enc = Encoding::make(2, 1);
        CMatrix sim = testing::matrix_of_action(
            2, [&](StateVector& s) { apply_mixer(s, MixerKind::EquivariantChi, beta, enc); });
        CHECK(equivalent_up_to_phase(unitary_of(seq), sim, 1e-10));
    }

    SUBCASE("ell = 1 blocks degenerate to an RZ sandwich") {
        double beta = 0.52;
        Encoding enc = Encoding::make(1, 1);
        for (MixerKind kind : {MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
            GateSequence seq = mixer_block(kind, 1, {0}, beta);
            CMatrix sim = testing::matrix_of_action(
                1, [&](StateVector& s) { apply_mixer(s, kind, beta, enc); });
            CHECK(equivalent_up_to_phase(unitary_of(seq), sim, 1e-10));
        }
    }

    SUBCASE("beta = 0 is the identity up to phase") {
        CMatrix u = unitary_of(mixer_block(MixerKind::EquivariantM, 2, {0, 1}, 0.0));
        CHECK(equivalent_up_to_phase(u, CMatrix::identity(4), 1e-10));
    }

    SUBCASE("gate counts: 2 ell H, at most 2 ell X, one phase") {
        for (MixerKind kind : {MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
            for (int ell : {2, 3}) {
                std::vector<int> qubits;
                for (int i = 0; i < ell; ++i) qubits.push_back(i);
                GateSequence seq = mixer_block(kind, ell, qubits, 0.3);
                int h = 0, x = 0, phases = 0;
                for (const Gate& g : seq.gates) {
                    h += g.kind == GateKind::H;
                    x += g.kind == GateKind::X;
                    phases += g.kind == GateKind::CPhase;
                }
                CHECK(h == 2 * ell);
                CHECK(x <= 2 * ell);
                CHECK(phases == 1);
            }
        }
    }
}

TEST_CASE("phase separator circuit") {
    SUBCASE("two-edge path equals the exact diagonal") {
        ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 2);
        DiagonalObservable h = build_diagonal(spec);
        double gamma = 2.19;
        CMatrix u = unitary_of(phase_separator_circuit(spec, gamma));
        CMatrix expected(static_cast<int>(h.dim()));
        for (uint64_t x = 0; x < h.dim(); ++x) {
            expected.at(static_cast<int>(x), static_cast<int>(x)) =
                cd{std::cos(gamma * h.values[x]), -std::sin(gamma * h.values[x])};
        }
        CHECK(equivalent_up_to_phase(u, expected, 1e-9));
    }

    SUBCASE("gamma = 0 is the identity") {
        ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 2);
        CMatrix u = unitary_of(phase_separator_circuit(spec, 0.0));
        CHECK(testing::max_entry_distance(u, CMatrix::identity(16)) <= 1e-12);
    }

    SUBCASE("no adjacent edges, no gates") {
        ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n2 3"), 2);
        CHECK(phase_separator_circuit(spec, 1.0).gates.empty());
    }

    SUBCASE("ell != 2 rejected") {
        ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 3);
        CHECK_THROWS_AS(phase_separator_circuit(spec, 1.0), std::invalid_argument);
    }
}

TEST_CASE("unitary_of") {
    CHECK(testing::max_entry_distance(unitary_of(GateSequence{2, {}}), CMatrix::identity(4)) ==
          0.0);

    GateSequence h1{1, {Gate{GateKind::H, {0}, 0.0}}};
    CMatrix u = unitary_of(h1);
    double inv = 1.0 / std::sqrt(2.0);
    CHECK(u.at(0, 0).real() == doctest::Approx(inv));
    CHECK(u.at(1, 1).real() == doctest::Approx(-inv));

    GateSequence cxcx{2, {Gate{GateKind::CX, {0, 1}, 0.0}, Gate{GateKind::CX, {0, 1}, 0.0}}};
    CHECK(testing::max_entry_distance(unitary_of(cxcx), CMatrix::identity(4)) == 0.0);

    GateSequence big{11, {}};
    CHECK_THROWS_AS(unitary_of(big), std::runtime_error);
}

TEST_CASE("equivalent_up_to_phase") {
    CMatrix x(2), z(2);
    x.at(0, 1) = x.at(1, 0) = 1.0;
    z.at(0, 0) = 1.0;
    z.at(1, 1) = -1.0;

    CHECK(equivalent_up_to_phase(x, x, 1e-12));
    CMatrix minus_x = x;
    for (auto& e : minus_x.a) e = -e;
    CHECK(equivalent_up_to_phase(x, minus_x, 1e-12));
    CHECK_FALSE(equivalent_up_to_phase(x, z, 1e-9));
}

TEST_CASE("circuit families match the simulator at random angles") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 10; ++rep) {
        double angle = uniform_in(rng, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi);

        // zz chains on 2..4 qubits against the diagonal exponential
        for (int k : {2, 3, 4}) {
            std::vector<int> qubits;
            for (int i = 0; i < k; ++i) qubits.push_back(i);
            CMatrix u = unitary_of(zz_chain(k, qubits, angle));
            CMatrix expected(1 << k);
            for (int x = 0; x < (1 << k); ++x) {
                double z = std::popcount(static_cast<unsigned>(x)) % 2 == 0 ? 1.0 : -1.0;
                expected.at(x, x) = cd{std::cos(angle * z), -std::sin(angle * z)};
            }
            CHECK(equivalent_up_to_phase(u, expected, 1e-9));
        }

        // mixer blocks against apply_mixer
        for (MixerKind kind : {MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
            for (int ell : {2, 3}) {
                Encoding enc = Encoding::make(ell, 1);
                std::vector<int> qubits;
                for (int i = 0; i < ell; ++i) qubits.push_back(i);
                CMatrix block = unitary_of(mixer_block(kind, ell, qubits, angle));
                CMatrix sim = testing::matrix_of_action(
                    ell, [&](StateVector& s) { apply_mixer(s, kind, angle, enc); });
                CHECK(equivalent_up_to_phase(block, sim, 1e-9));
            }
        }

        // separator on the two-edge path against apply_phase_separator
        ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 2);
        DiagonalObservable h = build_diagonal(spec);
        CMatrix sep = unitary_of(phase_separator_circuit(spec, angle));
        CMatrix sim = testing::matrix_of_action(
            4, [&](StateVector& s) { apply_phase_separator(s, h, angle); });
        CHECK(equivalent_up_to_phase(sep, sim, 1e-9));
    }
}

TEST_CASE("full circuit matches run_qaoa on a two-edge graph") {
    ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 2);
    DiagonalObservable h = build_diagonal(spec);
    Params params{{1.31}, {0.47}};
    for (MixerKind kind :
         {MixerKind::ClassicalB, MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
        CMatrix u = unitary_of(qaoa_circuit(spec, kind, params));
        StateVector from_circuit;
        from_circuit.num_qubits = spec.enc.total_qubits;
        from_circuit.amps.resize(spec.enc.dim());
        for (uint64_t row = 0; row < spec.enc.dim(); ++row) {
            from_circuit.amps[row] = u.at(static_cast<int>(row), 0);  // column of |0...0>
        }
        StateVector direct = run_qaoa(spec, h, kind, params);
        // align the global phase on the largest amplitude
        uint64_t ref = 0;
        for (uint64_t x = 0; x < direct.dim(); ++x) {
            if (std::abs(direct.amps[x]) > std::abs(direct.amps[ref])) ref = x;
        }
        cd phase = from_circuit.amps[ref] / direct.amps[ref];
        CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-9);
        double worst = 0.0;
        for (uint64_t x = 0; x < direct.dim(); ++x) {
            worst = std::max(worst, std::abs(from_circuit.amps[x] - phase * direct.amps[x]));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("empty parameters give a state-preparation-only circuit") {
    ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 2);
    GateSequence prep_m = qaoa_circuit(spec, MixerKind::EquivariantM, Params{});
    CHECK(prep_m.gates.size() == 4);  // Hadamard wall only
    for (const Gate& g : prep_m.gates) CHECK(g.kind == GateKind::H);

    GateSequence prep_chi = qaoa_circuit(spec, MixerKind::EquivariantChi, Params{});
    REQUIRE(prep_chi.gates.size() == 5);
    CHECK(prep_chi.gates[0].kind == GateKind::X);
    CHECK(prep_chi.gates[0].qubits == std::vector<int>{0});

    // and the prepared state is the distinguished state
    CMatrix u = unitary_of(prep_chi);
    StateVector expected = distinguished_state(MixerKind::EquivariantChi, spec.enc);
    for (uint64_t row = 0; row < expected.dim(); ++row) {
        CHECK(std::abs(u.at(static_cast<int>(row), 0) - expected.amps[row]) <= 1e-12);
    }
}

TEST_CASE("qasm export and round trip") {
    SUBCASE("single H") {
        GateSequence seq{1, {Gate{GateKind::H, {0}, 0.0}}};
        std::string text = export_qasm(seq);
        CHECK(text.find("OPENQASM 2.0;") != std::string::npos);
        CHECK(text.find("qreg q[1];") != std::string::npos);
        CHECK(text.find("h q[0];") != std::string::npos);
    }

    SUBCASE("zz chain text shape") {
        std::string text = export_qasm(zz_chain(2, {0, 1}, 0.25));
        CHECK(text.find("cx q[0],q[1];") != std::string::npos);
        CHECK(text.find("rz(0.5) q[1];") != std::string::npos);
    }

    SUBCASE("round trip preserves the unitary") {
        std::mt19937_64 rng(5150);
        for (MixerKind kind : {MixerKind::EquivariantM, MixerKind::EquivariantChi}) {
            for (int ell : {1, 2, 3}) {
                std::vector<int> qubits;
                for (int i = 0; i < ell; ++i) qubits.push_back(i);
                double beta = uniform_in(rng, -3.0, 3.0);
                GateSequence seq = mixer_block(kind, ell, qubits, beta);
                GateSequence parsed = parse_qasm(export_qasm(seq));
                CHECK(parsed.register_size == seq.register_size);
                CHECK(equivalent_up_to_phase(unitary_of(parsed), unitary_of(seq), 1e-9));
            }
        }
        ProblemSpec spec = ProblemSpec::edge_coloring(parse_edge_list("0 1\n1 2"), 2);
        GateSequence full = qaoa_circuit(spec, MixerKind::EquivariantChi, Params{{0.2}, {0.9}});
        GateSequence parsed = parse_qasm(export_qasm(full));
        CHECK(equivalent_up_to_phase(unitary_of(parsed), unitary_of(full), 1e-9));
    }

    SUBCASE("too many controls rejected") {
        GateSequence seq{4, {Gate{GateKind::CPhase, {0, 1, 2, 3}, 0.5}}};
        CHECK_THROWS_AS(export_qasm(seq), std::runtime_error);
    }

    SUBCASE("parse rejects junk") {
        CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_qasm("h q[0];\n"), std::invalid_argument);  // no qreg
    }
}

TEST_SUITE_END();
