#include "eqaoa/objective.hpp"

#include <stdexcept>
#include <string>

namespace eqaoa {

Encoding Encoding::make(int ell, int num_units) {
    if (ell < 1 || ell > 16) {
        throw std::invalid_argument("encoding: ell must be in 1..16");
    }
    if (num_units < 1) {
        throw std::invalid_argument("encoding: need at least one unit");
    }
    Encoding e;
    e.ell = ell;
    e.d = 1 << ell;
    e.num_units = num_units;
    e.total_qubits = num_units * ell;
    if (e.total_qubits >= 63) {
        throw std::invalid_argument("encoding: register too large for 64-bit basis indices");
    }
    return e;
}

ProblemSpec ProblemSpec::edge_coloring(Graph g, int ell) {
    Encoding enc = Encoding::make(ell, g.num_edges());
    return ProblemSpec{ProblemKind::EdgeColoring, std::move(g), enc, 0.0};
}

ProblemSpec ProblemSpec::partition(Graph g, double penalty) {
    Encoding enc = Encoding::make(2, g.num_vertices());
    if (g.num_vertices() % enc.d != 0) {
        throw std::invalid_argument("partition: vertex count must be divisible by " +
                                    std::to_string(enc.d));
    }
    if (penalty == 0.0) penalty = static_cast<double>(g.num_edges());
    return ProblemSpec{ProblemKind::Partition, std::move(g), enc, penalty};
}

int chi(std::span<const int> c, std::span<const int> cprime) {
    if (c.size() != cprime.size()) {
        throw std::invalid_argument("chi: bit vectors of unequal length");
    }
    int prod = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        prod *= (1 - c[i]) * (1 - cprime[i]) + c[i] * cprime[i];
    }
    return prod;
}

std::vector<int> decode(uint64_t x, const Encoding& enc) {
    std::vector<int> colors(enc.num_units);
    for (int u = 0; u < enc.num_units; ++u) {
        colors[u] = enc.color_of(x, u);
    }
    return colors;
}

long edge_coloring_value(const ProblemSpec& spec, uint64_t x) {
    long count = 0;
    const auto& edges = spec.graph.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int ci = spec.enc.color_of(x, i);
        for (int j = i + 1; j < static_cast<int>(edges.size()); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            bool adjacent = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (adjacent && ci == spec.enc.color_of(x, j)) ++count;
        }
    }
    return count;
}

double partition_value(const ProblemSpec& spec, uint64_t x) {
    if (spec.enc.ell != 2) {
        throw std::invalid_argument("partition objective requires ell == 2");
    }
    long same = 0;
    for (const Edge& e : spec.graph.edges()) {
        same += spec.enc.color_of(x, e.u) == spec.enc.color_of(x, e.v);
    }
    double a = 0.0, b0 = 0.0, b1 = 0.0;
    for (int v = 0; v < spec.graph.num_vertices(); ++v) {
        int color = spec.enc.color_of(x, v);
        int bit0 = color & 1;
        int bit1 = (color >> 1) & 1;
        a += bit0 - 0.5;
        b0 += (1 - bit0) * (bit1 - 0.5);
        b1 += bit0 * (bit1 - 0.5);
    }
    double w = 2.0 * spec.penalty;
    return -static_cast<double>(same) + (w * a) * (w * a) + (w * b0) * (w * b0) +
           (w * b1) * (w * b1);
}

double objective_value(const ProblemSpec& spec, uint64_t x) {
    switch (spec.kind) {
        case ProblemKind::EdgeColoring:
            return static_cast<double>(edge_coloring_value(spec, x));
        case ProblemKind::Partition:
            return partition_value(spec, x);
    }
    throw std::logic_error("objective_value: bad problem kind");
}

DiagonalObservable build_diagonal(const ProblemSpec& spec, int qubit_cap) {
    if (spec.enc.total_qubits > qubit_cap) {
        throw std::runtime_error("diagonal for " + std::to_string(spec.enc.total_qubits) +
                                 " qubits exceeds the cap of " + std::to_string(qubit_cap));
    }
    DiagonalObservable h;
    h.values.resize(spec.enc.dim());
    if (spec.kind == ProblemKind::EdgeColoring) {
        // Precompute per-pair matching; worth it, this dominates campaign setup.
        auto pairs = adjacent_edge_pairs(spec.graph);
        for (uint64_t x = 0; x < h.dim(); ++x) {
            long count = 0;
            for (const EdgePair& p : pairs) {
                count += spec.enc.color_of(x, p.first_edge) == spec.enc.color_of(x, p.second_edge);
            }
            h.values[x] = static_cast<double>(count);
        }
    } else {
        for (uint64_t x = 0; x < h.dim(); ++x) {
            h.values[x] = partition_value(spec, x);
        }
    }
    return h;
}

ColoringClass classify_class_one(const ProblemSpec& spec, std::span<const uint64_t> samples) {
    if (spec.kind != ProblemKind::EdgeColoring) {
        throw std::invalid_argument("class-one detection applies to edge coloring only");
    }
    if (spec.enc.d != spec.graph.max_degree()) {
        return ColoringClass::NotFound;
    }
    for (uint64_t x : samples) {
        if (edge_coloring_value(spec, x) == 0) {
            return ColoringClass::FoundProper;
        }
    }
    return ColoringClass::NotFound;
}

}  // namespace eqaoa
