#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqaoa/objective.hpp"
#include "eqaoa/statevector.hpp"

namespace eqaoa {

enum class MixerKind { ClassicalB, EquivariantM, EquivariantChi };

// Config names: "b" | "hm" | "hchi".
MixerKind mixer_from_name(std::string_view name);
std::string_view mixer_name(MixerKind kind);

/// One qudit's worth of an equivariant mixer: the d x d symmetric matrix,
/// its diagonal in the Hadamard frame, and the same diagonal with the
/// constant (d-1)(d-2)/2 - 1 removed (a single entry d, zeros elsewhere).
struct SingleQuditMixer {
    int d = 0;
    std::vector<double> matrix;            // d*d row-major
    std::vector<double> frame_diagonal;    // d entries
    std::vector<double> reduced_diagonal;  // frame_diagonal minus the scalar
    int distinguished_index = 0;           // frame index carrying the entry d
};

// Builds the matrix (off-diagonal 1 for EquivariantM, (-1)^(i+j) for
// EquivariantChi, diagonal (d-1 choose 2) for both), conjugates it by the
// ell-fold Hadamard numerically, and checks the result is diagonal to 1e-12.
// ClassicalB has no qudit matrix of this shape and is rejected.
SingleQuditMixer single_qudit_matrix(MixerKind kind, int d);

// Sum of the ell single-qubit X factors on one qudit, as a d x d 0/1 matrix.
std::vector<double> single_qudit_b_matrix(int d);

// |xi> (uniform) for ClassicalB / EquivariantM; for EquivariantChi the
// amplitudes carry sign (-1)^(parity of unit 0's color index), i.e. a single
// |-> factor on the register's least significant qubit.
StateVector distinguished_state(MixerKind kind, const Encoding& enc);

struct ExtremalReport {
    double extremal_value = 0.0;
    double gap = 0.0;
    double match_error = 0.0;
    bool unique = false;
};

// Enumerates the full mixer spectrum through the per-unit Hadamard-frame
// diagonals (the mixer is a sum of single-unit terms, so every eigenvalue is
// a sum of per-unit frame entries) and compares the extremal eigenvector
// against distinguished_state up to global sign.
ExtremalReport verify_extremal(MixerKind kind, const Encoding& enc);

}  // namespace eqaoa
