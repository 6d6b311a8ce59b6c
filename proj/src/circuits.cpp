#include "eqaoa/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqaoa {

namespace {

void check_qubits(int register_size, const std::vector<int>& qubits) {
    std::set<int> seen;
    for (int q : qubits) {
        if (q < 0 || q >= register_size) {
            throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                        " outside register of size " +
                                        std::to_string(register_size));
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("gate qubits must be distinct");
        }
    }
}

}  // namespace

void GateSequence::append(const GateSequence& other) {
    if (register_size != other.register_size) {
        throw std::invalid_argument("appending sequences over different registers");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

GateSequence zz_chain(int register_size, const std::vector<int>& qubits, double beta) {
    if (qubits.size() < 2) {
        throw std::invalid_argument("zz chain needs at least two qubits");
    }
    check_qubits(register_size, qubits);
    GateSequence seq{register_size, {}};
    for (size_t i = 0; i + 1 < qubits.size(); ++i) {
        seq.gates.push_back(Gate{GateKind::CX, {qubits[i], qubits[i + 1]}, 0.0});
    }
    seq.gates.push_back(Gate{GateKind::RZ, {qubits.back()}, 2.0 * beta});
    for (size_t i = qubits.size() - 1; i-- > 0;) {
        seq.gates.push_back(Gate{GateKind::CX, {qubits[i], qubits[i + 1]}, 0.0});
    }
    return seq;
}

GateSequence mixer_block(MixerKind kind, int register_size, const std::vector<int>& qudit_qubits,
                         double beta) {
    if (kind == MixerKind::ClassicalB) {
        throw std::invalid_argument("mixer_block covers the equivariant mixers only");
    }
    if (qudit_qubits.empty()) {
        throw std::invalid_argument("mixer block needs at least one qubit");
    }
    check_qubits(register_size, qudit_qubits);
    const int ell = static_cast<int>(qudit_qubits.size());
    const int d = 1 << ell;
    const int frame_index = kind == MixerKind::EquivariantChi ? 1 : 0;

    GateSequence seq{register_size, {}};
    for (int q : qudit_qubits) seq.gates.push_back(Gate{GateKind::H, {q}, 0.0});
    // X where the distinguished frame index has a 0 bit, mapping it to 1...1.
    std::vector<int> flipped;
    for (int i = 0; i < ell; ++i) {
        if (((frame_index >> i) & 1) == 0) flipped.push_back(qudit_qubits[i]);
    }
    for (int q : flipped) seq.gates.push_back(Gate{GateKind::X, {q}, 0.0});
    if (ell == 1) {
        // diag(1, e^{i theta}) is RZ(theta) up to global phase.
        seq.gates.push_back(Gate{GateKind::RZ, {qudit_qubits[0]}, -beta * d});
    } else {
        seq.gates.push_back(Gate{GateKind::CPhase, qudit_qubits, -beta * d});
    }
    for (int q : flipped) seq.gates.push_back(Gate{GateKind::X, {q}, 0.0});
    for (int q : qudit_qubits) seq.gates.push_back(Gate{GateKind::H, {q}, 0.0});
    return seq;
}

GateSequence phase_separator_circuit(const ProblemSpec& spec, double gamma) {
    if (spec.kind != ProblemKind::EdgeColoring) {
        throw std::invalid_argument("separator circuit covers edge coloring only");
    }
    if (spec.enc.ell != 2) {
        throw std::invalid_argument("separator circuit requires ell == 2");
    }
    GateSequence seq{spec.enc.total_qubits, {}};
    const double angle = gamma / 4.0;
    for (const EdgePair& p : adjacent_edge_pairs(spec.graph)) {
        int e0 = 2 * p.first_edge, e1 = 2 * p.first_edge + 1;
        int f0 = 2 * p.second_edge, f1 = 2 * p.second_edge + 1;
        seq.append(zz_chain(seq.register_size, {e0, f0}, angle));
        seq.append(zz_chain(seq.register_size, {e1, f1}, angle));
        seq.append(zz_chain(seq.register_size, {e0, f0, e1, f1}, angle));
    }
    return seq;
}

GateSequence qaoa_circuit(const ProblemSpec& spec, MixerKind kind, const Params& params) {
    if (!params.gammas.empty()) params.validate();
    GateSequence seq{spec.enc.total_qubits, {}};

    // State prep: |0..0> -> distinguished state.
    if (kind == MixerKind::EquivariantChi) {
        seq.gates.push_back(Gate{GateKind::X, {0}, 0.0});
    }
    for (int q = 0; q < seq.register_size; ++q) {
        seq.gates.push_back(Gate{GateKind::H, {q}, 0.0});
    }

    for (int layer = 0; layer < params.depth(); ++layer) {
        seq.append(phase_separator_circuit(spec, params.gammas[layer]));
        double beta = params.betas[layer];
        if (kind == MixerKind::ClassicalB) {
            for (int q = 0; q < seq.register_size; ++q) {
                seq.gates.push_back(Gate{GateKind::H, {q}, 0.0});
                seq.gates.push_back(Gate{GateKind::RZ, {q}, 2.0 * beta});
                seq.gates.push_back(Gate{GateKind::H, {q}, 0.0});
            }
        } else {
            for (int u = 0; u < spec.enc.num_units; ++u) {
                std::vector<int> qubits;
                for (int i = 0; i < spec.enc.ell; ++i) qubits.push_back(u * spec.enc.ell + i);
                MixerKind unit_kind =
                    (kind == MixerKind::EquivariantChi && u == 0) ? MixerKind::EquivariantChi
                                                                  : MixerKind::EquivariantM;
                seq.append(mixer_block(unit_kind, seq.register_size, qubits, beta));
            }
        }
    }
    return seq;
}

namespace {

// Applies one gate to every column of the accumulated unitary.
void apply_gate_columns(CMatrix& u, const Gate& g) {
    const uint64_t dim = static_cast<uint64_t>(u.n);
    auto col = [&](uint64_t row, uint64_t c) -> std::complex<double>& {
        return u.a[row * dim + c];
    };
    switch (g.kind) {
        case GateKind::H: {
            const uint64_t bit = uint64_t{1} << g.qubits[0];
            const double inv = 1.0 / std::sqrt(2.0);
            for (uint64_t row = 0; row < dim; ++row) {
                if (row & bit) continue;
                for (uint64_t c = 0; c < dim; ++c) {
                    auto a0 = col(row, c);
                    auto a1 = col(row | bit, c);
                    col(row, c) = inv * (a0 + a1);
                    col(row | bit, c) = inv * (a0 - a1);
                }
            }
            break;
        }
        case GateKind::X: {
            const uint64_t bit = uint64_t{1} << g.qubits[0];
            for (uint64_t row = 0; row < dim; ++row) {
                if (row & bit) continue;
                for (uint64_t c = 0; c < dim; ++c) {
                    std::swap(col(row, c), col(row | bit, c));
                }
            }
            break;
        }
        case GateKind::RZ: {
            const uint64_t bit = uint64_t{1} << g.qubits[0];
            const std::complex<double> lo{std::cos(g.angle / 2), -std::sin(g.angle / 2)};
            const std::complex<double> hi{std::cos(g.angle / 2), std::sin(g.angle / 2)};
            for (uint64_t row = 0; row < dim; ++row) {
                auto f = (row & bit) ? hi : lo;
                for (uint64_t c = 0; c < dim; ++c) col(row, c) *= f;
            }
            break;
        }
        case GateKind::CX: {
            const uint64_t ctrl = uint64_t{1} << g.qubits[0];
            const uint64_t targ = uint64_t{1} << g.qubits[1];
            for (uint64_t row = 0; row < dim; ++row) {
                if ((row & ctrl) && !(row & targ)) {
                    for (uint64_t c = 0; c < dim; ++c) {
                        std::swap(col(row, c), col(row | targ, c));
                    }
                }
            }
            break;
        }
        case GateKind::CPhase: {
            uint64_t mask = 0;
            for (int q : g.qubits) mask |= uint64_t{1} << q;
            const std::complex<double> f{std::cos(g.angle), std::sin(g.angle)};
            for (uint64_t row = 0; row < dim; ++row) {
                if ((row & mask) == mask) {
                    for (uint64_t c = 0; c < dim; ++c) col(row, c) *= f;
                }
            }
            break;
        }
    }
}

}  // namespace

CMatrix unitary_of(const GateSequence& seq) {
    if (seq.register_size > 10) {
        throw std::runtime_error("unitary reconstruction capped at 10 qubits");
    }
    CMatrix u = CMatrix::identity(1 << seq.register_size);
    for (const Gate& g : seq.gates) {
        check_qubits(seq.register_size, g.qubits);
        apply_gate_columns(u, g);
    }
    return u;
}

bool equivalent_up_to_phase(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.n != b.n) return false;
    // If A = e^{i phi} B then tr(A^dagger B) = e^{-i phi} N.
    std::complex<double> t = inner_trace(a, b);
    double mag = std::abs(t);
    if (mag < 1e-12 * a.n) return false;  // orthogonal, no phase can align
    std::complex<double> phase = std::conj(t) / mag;
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) {
        worst = std::max(worst, std::abs(a.a[i] - phase * b.a[i]));
    }
    return worst <= tol;
}

namespace {

std::string fmt_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

void emit_cu1(std::ostringstream& os, double theta, int a, int b) {
    os << "cu1(" << fmt_angle(theta) << ") q[" << a << "],q[" << b << "];\n";
}

}  // namespace

std::string export_qasm(const GateSequence& seq) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << seq.register_size << "];\n";
    for (const Gate& g : seq.gates) {
        switch (g.kind) {
            case GateKind::H:
                os << "h q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::X:
                os << "x q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::RZ:
                os << "rz(" << fmt_angle(g.angle) << ") q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::CX:
                os << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
                break;
            case GateKind::CPhase: {
                if (g.qubits.size() == 2) {
                    emit_cu1(os, g.angle, g.qubits[0], g.qubits[1]);
                } else if (g.qubits.size() == 3) {
                    // ccu1 via the standard ancilla-free recursion.
                    int a = g.qubits[0], b = g.qubits[1], c = g.qubits[2];
                    emit_cu1(os, g.angle / 2, b, c);
                    os << "cx q[" << a << "],q[" << b << "];\n";
                    emit_cu1(os, -g.angle / 2, b, c);
                    os << "cx q[" << a << "],q[" << b << "];\n";
                    emit_cu1(os, g.angle / 2, a, c);
                } else {
                    throw std::runtime_error(
                        "qasm export supports controlled phases on at most 3 qubits");
                }
                break;
            }
        }
    }
    return os.str();
}

GateSequence parse_qasm(const std::string& text) {
    GateSequence seq{0, {}};
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": " + what);
    };
    auto parse_qubits = [&](const std::string& args) {
        std::vector<int> qubits;
        size_t pos = 0;
        while ((pos = args.find("q[", pos)) != std::string::npos) {
            size_t end = args.find(']', pos);
            if (end == std::string::npos) fail("unterminated qubit reference");
            qubits.push_back(std::stoi(args.substr(pos + 2, end - pos - 2)));
            pos = end;
        }
        return qubits;
    };

    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
            line.rfind("//", 0) == 0) {
            continue;
        }
        if (line.back() != ';') fail("missing semicolon");
        line.pop_back();
        if (line.rfind("qreg", 0) == 0) {
            auto open = line.find('[');
            auto close = line.find(']');
            if (open == std::string::npos || close == std::string::npos) fail("bad qreg");
            seq.register_size = std::stoi(line.substr(open + 1, close - open - 1));
            continue;
        }
        std::string name = line.substr(0, line.find_first_of(" ("));
        double angle = 0.0;
        std::string args = line;
        auto paren = line.find('(');
        if (paren != std::string::npos) {
            auto close = line.find(')', paren);
            if (close == std::string::npos) fail("unterminated angle");
            angle = std::stod(line.substr(paren + 1, close - paren - 1));
            args = line.substr(close + 1);
        } else {
            args = line.substr(name.size());
        }
        std::vector<int> qubits = parse_qubits(args);
        if (name == "h" && qubits.size() == 1) {
            seq.gates.push_back(Gate{GateKind::H, qubits, 0.0});
        } else if (name == "x" && qubits.size() == 1) {
            seq.gates.push_back(Gate{GateKind::X, qubits, 0.0});
        } else if (name == "rz" && qubits.size() == 1) {
            seq.gates.push_back(Gate{GateKind::RZ, qubits, angle});
        } else if (name == "cx" && qubits.size() == 2) {
            seq.gates.push_back(Gate{GateKind::CX, qubits, 0.0});
        } else if (name == "cu1" && qubits.size() == 2) {
            seq.gates.push_back(Gate{GateKind::CPhase, qubits, angle});
        } else {
            fail("unsupported statement '" + name + "'");
        }
    }
    if (seq.register_size == 0) {
        throw std::invalid_argument("qasm: no qreg declaration");
    }
    return seq;
}

}  // namespace eqaoa
