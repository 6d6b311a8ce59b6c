#pragma once

#include <string>
#include <vector>

#include "eqaoa/dense.hpp"
#include "eqaoa/mixers.hpp"
#include "eqaoa/objective.hpp"
#include "eqaoa/statevector.hpp"

namespace eqaoa {

enum class GateKind { H, X, RZ, CX, CPhase };

/// CX lists {control, target}; CPhase lists all participating qubits (the
/// phase lands on the all-ones subspace, so control/target split is cosmetic)
/// with at least two entries.
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    double angle = 0.0;
    friend bool operator==(const Gate&, const Gate&) = default;
};

struct GateSequence {
    int register_size = 0;
    std::vector<Gate> gates;

    void append(const GateSequence& other);  // register sizes must match
    friend bool operator==(const GateSequence&, const GateSequence&) = default;
};

// CNOT ladder onto the last qubit, RZ(2 beta), reversed ladder: realizes
// exp(-i beta Z...Z) on the listed qubits exactly.
GateSequence zz_chain(int register_size, const std::vector<int>& qubits, double beta);

// Frame-conjugation block on one qudit: Hadamard frame in, X conjugation onto the
// distinguished frame index, one phase of -d*beta, then undo. Equals
// apply_mixer's per-qudit action up to global phase. ClassicalB is rejected
// (its layer is the per-qubit H RZ(2 beta) H, see qaoa_circuit).
GateSequence mixer_block(MixerKind kind, int register_size, const std::vector<int>& qudit_qubits,
                         double beta);

// ell = 2 edge coloring only: per adjacent pair, three zz chains at angle
// gamma/4 on (e0,f0), (e1,f1), (e0,f0,e1,f1). Equals exp(-i gamma H_P) up to
// global phase.
GateSequence phase_separator_circuit(const ProblemSpec& spec, double gamma);

// Full run as a circuit: state preparation from |0..0> (Hadamard wall, with
// an X on qubit 0 first for EquivariantChi) followed by the p layers.
GateSequence qaoa_circuit(const ProblemSpec& spec, MixerKind kind, const Params& params);

// Ordered product of the gate matrices; register capped at 10 qubits.
CMatrix unitary_of(const GateSequence& seq);

// True iff A = e^{i phi} B for some phi: aligns the phase by the normalized
// trace of A^dagger B, then compares entries to tol.
bool equivalent_up_to_phase(const CMatrix& a, const CMatrix& b, double tol);

// OpenQASM 2.0. One-control phases emit as cu1; two-control phases use the
// standard cu1/cx recursion; more controls are unsupported.
std::string export_qasm(const GateSequence& seq);

// Parses the subset export_qasm emits (h, x, rz, cx, cu1); round trips.
GateSequence parse_qasm(const std::string& text);

}  // namespace eqaoa
