#pragma once

#include <vector>

#include "eqaoa/mixers.hpp"
#include "eqaoa/objective.hpp"
#include "eqaoa/statevector.hpp"

namespace eqaoa {

/// A permutation of the color set {0..d-1}, stored by images.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int d);
    int d() const { return static_cast<int>(images.size()); }
    int operator()(int c) const { return images[c]; }

    Permutation compose(const Permutation& then) const;  // x -> then(this(x))
    Permutation inverse() const;
    bool is_valid() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// The cyclic shift g: c -> c+1 mod d.
Permutation cyclic_shift(int d);

// All d! permutations of {0..d-1}, lexicographic.
std::vector<Permutation> all_permutations(int d);

// Basis index with every unit's color mapped through the permutation.
uint64_t permute_basis_index(uint64_t x, const Permutation& sigma, const Encoding& enc);

// phi(sigma) acting simultaneously on all units: amplitude at x moves to the
// permuted index.
void apply_color_permutation(StateVector& s, const Permutation& sigma, const Encoding& enc);

// d x d 0/1 matrix of the single-qudit representation.
std::vector<double> permutation_matrix(const Permutation& sigma);

// max-entry norm of A P - P A for a d x d operator A.
bool commutes(const std::vector<double>& op, const Permutation& sigma, double tol = 1e-10);

// Value invariance F(sigma . x) == F(x): commutation of a diagonal observable
// with the full-register representation.
bool commutes(const DiagonalObservable& h, const Permutation& sigma, const Encoding& enc);

// All sigma in S_d whose single-qudit representation commutes with op.
// Brute force over d! elements; d capped at 8.
std::vector<Permutation> centralizer_in_sd(const std::vector<double>& op, int d,
                                           double tol = 1e-10);

// Norms of the projections of s onto the d eigenspaces of phi(g), eigenvalue
// e^{2 pi i j / d} for component j. Squared norms sum to 1.
std::vector<double> zd_component_norms(const StateVector& s, const Encoding& enc);

// Runs the QAOA chain from the mixer's distinguished state and returns the
// total squared norm leaked outside its home component (j = 0 for
// EquivariantM / ClassicalB starts in W_0; j = d/2 for EquivariantChi).
double check_qaoa_invariance(const ProblemSpec& spec, MixerKind kind, const Params& params);

struct PFReport {
    bool nonnegative = false;
    bool irreducible = false;
    bool extremal_positive = false;
    double spectral_gap = 0.0;
};

// Perron-Frobenius hypotheses and conclusion, checked numerically on a dense
// symmetric matrix: entrywise nonnegativity, strong connectivity of the
// sparsity digraph, and strict positivity of the top eigenvector.
PFReport perron_frobenius_check(const std::vector<double>& m, int n);

// Dense full-register mixer (sum of embedded single-unit terms, reduced
// diagonals removed are NOT applied here: entries are the raw matrices).
std::vector<double> full_mixer_matrix(MixerKind kind, const Encoding& enc);

}  // namespace eqaoa
