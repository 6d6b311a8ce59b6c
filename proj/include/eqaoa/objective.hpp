#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eqaoa/graph.hpp"

namespace eqaoa {

/// Qudit encoding: each of num_units units (edges for coloring, vertices for
/// partitioning) carries ell qubits holding a color index in 0..d-1.
///
/// Bit layout, fixed everywhere: unit u owns qubits [u*ell, (u+1)*ell); within
/// a unit the lower qubit index is the less significant color bit; a basis
/// index is x = sum_q bit(q) * 2^q.
struct Encoding {
    int ell = 0;
    int d = 0;
    int num_units = 0;
    int total_qubits = 0;

    static Encoding make(int ell, int num_units);

    uint64_t dim() const { return uint64_t{1} << total_qubits; }
    int color_of(uint64_t x, int unit) const {
        return static_cast<int>((x >> (unit * ell)) & static_cast<uint64_t>(d - 1));
    }
    friend bool operator==(const Encoding&, const Encoding&) = default;
};

enum class ProblemKind { EdgeColoring, Partition };

struct ProblemSpec {
    ProblemKind kind;
    Graph graph;
    Encoding enc;
    double penalty = 0.0;  // partition only

    // num_units = |E|, d = 2^ell colors.
    static ProblemSpec edge_coloring(Graph g, int ell);
    // k = 4 parts encoded in 2 bits per vertex; penalty weight defaults to |E|.
    static ProblemSpec partition(Graph g, double penalty = 0.0);
};

// Characteristic function of a color: 1 iff the two bit vectors agree in
// every position, computed as the product of per-bit indicators
// (1-c_i)(1-c'_i) + c_i c'_i.
int chi(std::span<const int> c, std::span<const int> cprime);

// Colors of all units of basis index x, least significant bit first.
std::vector<int> decode(uint64_t x, const Encoding& enc);

// Number of adjacent edge pairs sharing a color.
long edge_coloring_value(const ProblemSpec& spec, uint64_t x);

// -S + (2P*A)^2 + (2P*B0)^2 + (2P*B1)^2 with S the same-color adjacency count
// and A, B0, B1 the three balance sums over vertex color bits.
double partition_value(const ProblemSpec& spec, uint64_t x);

// Either of the above, by spec.kind.
double objective_value(const ProblemSpec& spec, uint64_t x);

/// The problem Hamiltonian as its diagonal: values[x] is the classical
/// objective at basis index x.
struct DiagonalObservable {
    std::vector<double> values;
    uint64_t dim() const { return values.size(); }
};

// Full enumeration of the objective over all basis indices. Throws when
// total_qubits exceeds the cap.
DiagonalObservable build_diagonal(const ProblemSpec& spec, int qubit_cap = 24);

enum class ColoringClass { FoundProper, NotFound };

// FoundProper iff some sample achieves objective 0 and d equals the graph's
// maximum degree (the coloring then witnesses a class-one graph).
ColoringClass classify_class_one(const ProblemSpec& spec, std::span<const uint64_t> samples);

}  // namespace eqaoa
