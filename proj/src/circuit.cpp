#include "dgt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace dgt {

namespace {

constexpr double kPi = std::numbers::pi;

void check_distinct(const std::vector<int>& qubits) {
    std::set<int> seen;
    for (int q : qubits) {
        if (q < 0) throw std::domain_error("negative qubit index");
        if (!seen.insert(q).second)
            throw std::domain_error("gate qubit indices must be distinct");
    }
}

Gate make(GateKind kind, std::vector<int> qubits, std::vector<bool> on_zero = {},
          double theta = 0.0) {
    check_distinct(qubits);
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.on_zero = std::move(on_zero);
    g.theta = theta;
    return g;
}

} // namespace

int Gate::control_count() const {
    switch (kind) {
        case GateKind::CNOT: return 1;
        case GateKind::CZ:
        case GateKind::CPHASE: return 2; // symmetric; every leg carries polarity
        case GateKind::TOFFOLI: return 2;
        case GateKind::CCPHASE: return 3;
        default: return 0;
    }
}

bool Gate::is_parameterized() const {
    switch (kind) {
        case GateKind::RZ:
        case GateKind::RX:
        case GateKind::CPHASE:
        case GateKind::XY:
        case GateKind::CCPHASE: return true;
        default: return false;
    }
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::H: return "H";
        case GateKind::RZ: return "RZ";
        case GateKind::RX: return "RX";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::CPHASE: return "CPHASE";
        case GateKind::SWAP: return "SWAP";
        case GateKind::XY: return "XY";
        case GateKind::TOFFOLI: return "TOFFOLI";
        case GateKind::CCPHASE: return "CCPHASE";
        case GateKind::ORACLE: return "ORACLE";
    }
    return "?";
}

Gate gate_x(int q) { return make(GateKind::X, {q}); }
Gate gate_h(int q) { return make(GateKind::H, {q}); }
Gate gate_rz(int q, double theta) { return make(GateKind::RZ, {q}, {}, theta); }

Gate gate_rx(int q, double theta) {
    const double steps = theta / (kPi / 2.0);
    if (std::abs(steps - std::round(steps)) > 1e-9)
        throw std::domain_error("RX angle must be a multiple of pi/2");
    return make(GateKind::RX, {q}, {}, theta);
}

Gate gate_cnot(int control, int target, bool on_zero) {
    return make(GateKind::CNOT, {control, target}, {on_zero});
}

Gate gate_cz(int a, int b, bool a_on_zero, bool b_on_zero) {
    return make(GateKind::CZ, {a, b}, {a_on_zero, b_on_zero});
}

Gate gate_cphase(int a, int b, double theta, bool a_on_zero, bool b_on_zero) {
    return make(GateKind::CPHASE, {a, b}, {a_on_zero, b_on_zero}, theta);
}

Gate gate_swap(int a, int b) { return make(GateKind::SWAP, {a, b}); }
Gate gate_xy(int a, int b, double theta) { return make(GateKind::XY, {a, b}, {}, theta); }

Gate gate_toffoli(int c1, int c2, int target, bool c1_on_zero, bool c2_on_zero) {
    return make(GateKind::TOFFOLI, {c1, c2, target}, {c1_on_zero, c2_on_zero});
}

Gate gate_ccphase(int a, int b, int c, double theta, bool a_on_zero, bool b_on_zero,
                  bool c_on_zero) {
    return make(GateKind::CCPHASE, {a, b, c}, {a_on_zero, b_on_zero, c_on_zero}, theta);
}

Gate gate_oracle(std::vector<int> qubits, std::shared_ptr<const OracleTable> table) {
    if (!table) throw std::domain_error("oracle gate needs a table");
    const std::size_t dim = 1ull << qubits.size();
    if (table->diagonal ? table->phases.size() != dim : table->permutation.size() != dim)
        throw std::domain_error("oracle table size does not match qubit count");
    Gate g = make(GateKind::ORACLE, std::move(qubits));
    g.oracle = std::move(table);
    return g;
}

Circuit& Circuit::add(Gate g) {
    for (int q : g.qubits)
        if (q >= qubit_count)
            throw std::out_of_range("gate qubit index exceeds circuit width");
    gates.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other, const std::vector<int>& mapping) {
    if (static_cast<int>(mapping.size()) != other.qubit_count)
        throw std::domain_error("qubit mapping size mismatch in append");
    for (Gate g : other.gates) {
        for (int& q : g.qubits) q = mapping.at(q);
        add(std::move(g));
    }
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    std::vector<int> ident(other.qubit_count);
    for (int i = 0; i < other.qubit_count; ++i) ident[i] = i;
    return append(other, ident);
}

namespace {

std::shared_ptr<const OracleTable> invert_oracle(const OracleTable& table) {
    auto inv = std::make_shared<OracleTable>();
    inv->diagonal = table.diagonal;
    inv->label = table.label.empty() ? std::string() : table.label + "_adj";
    if (table.diagonal) {
        inv->phases.reserve(table.phases.size());
        for (double p : table.phases) inv->phases.push_back(-p);
    } else {
        inv->permutation.resize(table.permutation.size());
        for (std::size_t i = 0; i < table.permutation.size(); ++i)
            inv->permutation[table.permutation[i]] = i;
    }
    return inv;
}

} // namespace

Circuit adjoint(const Circuit& circuit) {
    Circuit out(circuit.qubit_count,
                circuit.label.empty() ? std::string() : circuit.label + "_adj");
    out.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        Gate g = *it;
        if (g.is_parameterized()) g.theta = -g.theta;
        if (g.kind == GateKind::ORACLE) g.oracle = invert_oracle(*g.oracle);
        out.gates.push_back(std::move(g));
    }
    return out;
}

namespace {

} // namespace

// R_y(theta) from the available set: the matrix RX(pi/2) RZ(-theta) RX(-pi/2),
// emitted in application order.  Exact, no stray phase.
void add_ry(Circuit& c, int q, double theta) {
    c.add(gate_rx(q, -kPi / 2));
    c.add(gate_rz(q, -theta));
    c.add(gate_rx(q, kPi / 2));
}

Circuit controlled(const Gate& gate, int control, bool on_zero) {
    const int width = std::max(control, *std::max_element(gate.qubits.begin(),
                                                          gate.qubits.end())) +
                      1;
    for (int q : gate.qubits)
        if (q == control) throw std::domain_error("control qubit collides with gate");
    Circuit c(width);
    switch (gate.kind) {
        case GateKind::X:
            c.add(gate_cnot(control, gate.qubits[0], on_zero));
            break;
        case GateKind::H: {
            // Ry(pi/4)-conjugated CZ: maps the Z kick to an H on the target.
            const int t = gate.qubits[0];
            add_ry(c, t, -kPi / 4);
            c.add(gate_cz(control, t, on_zero, false));
            add_ry(c, t, kPi / 4);
            break;
        }
        case GateKind::RZ: {
            // CNOT-conjugated half rotations; exact, no stray phase.
            const int t = gate.qubits[0];
            c.add(gate_rz(t, gate.theta / 2));
            c.add(gate_cnot(control, t, on_zero));
            c.add(gate_rz(t, -gate.theta / 2));
            c.add(gate_cnot(control, t, on_zero));
            break;
        }
        case GateKind::RX: {
            const int t = gate.qubits[0];
            c.add(gate_h(t));
            c.add(gate_rz(t, gate.theta / 2));
            c.add(gate_cnot(control, t, on_zero));
            c.add(gate_rz(t, -gate.theta / 2));
            c.add(gate_cnot(control, t, on_zero));
            c.add(gate_h(t));
            break;
        }
        case GateKind::CNOT:
            c.add(gate_toffoli(control, gate.qubits[0], gate.qubits[1], on_zero,
                               gate.control_on_zero(0)));
            break;
        case GateKind::CZ:
            c.add(gate_ccphase(control, gate.qubits[0], gate.qubits[1], kPi, on_zero,
                               gate.control_on_zero(0), gate.control_on_zero(1)));
            break;
        case GateKind::CPHASE:
            c.add(gate_ccphase(control, gate.qubits[0], gate.qubits[1], gate.theta,
                               on_zero, gate.control_on_zero(0), gate.control_on_zero(1)));
            break;
        case GateKind::SWAP: {
            const int a = gate.qubits[0], b = gate.qubits[1];
            c.add(gate_cnot(b, a));
            c.add(gate_toffoli(control, a, b, on_zero, false));
            c.add(gate_cnot(b, a));
            break;
        }
        case GateKind::ORACLE: {
            // Extend the table with the control as the new most significant bit.
            const auto& t = *gate.oracle;
            auto ext = std::make_shared<OracleTable>();
            ext->diagonal = t.diagonal;
            ext->label = t.label.empty() ? std::string("controlled") : "c_" + t.label;
            const std::size_t dim = 1ull << gate.qubits.size();
            const std::size_t sel = on_zero ? 0 : 1;
            if (t.diagonal) {
                ext->phases.assign(2 * dim, 0.0);
                for (std::size_t i = 0; i < dim; ++i)
                    ext->phases[sel * dim + i] = t.phases[i];
            } else {
                ext->permutation.resize(2 * dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    ext->permutation[sel * dim + i] = sel * dim + t.permutation[i];
                    ext->permutation[(1 - sel) * dim + i] = (1 - sel) * dim + i;
                }
            }
            std::vector<int> qs = {control};
            qs.insert(qs.end(), gate.qubits.begin(), gate.qubits.end());
            c.add(gate_oracle(std::move(qs), std::move(ext)));
            break;
        }
        default:
            throw std::domain_error(std::string("controlled() unsupported for ") +
                                    gate_name(gate.kind));
    }
    return c;
}

Circuit controlled(const Circuit& circuit, int control, bool on_zero) {
    for (const Gate& g : circuit.gates)
        for (int q : g.qubits)
            if (q == control)
                throw std::domain_error("control qubit used inside target circuit");
    Circuit out(std::max(circuit.qubit_count, control + 1), circuit.label);
    for (const Gate& g : circuit.gates) {
        Circuit cg = controlled(g, control, on_zero);
        out.qubit_count = std::max(out.qubit_count, cg.qubit_count);
        for (Gate& gg : cg.gates) out.add(std::move(gg));
    }
    return out;
}

Circuit compile_toffoli(ToffoliStyle style) {
    Circuit c(3, "toffoli");
    const int a = 0, b = 1, t = 2;
    switch (style) {
        case ToffoliStyle::Native:
            c.add(gate_toffoli(a, b, t));
            break;
        case ToffoliStyle::CcphaseNative:
            c.add(gate_h(t));
            c.add(gate_ccphase(a, b, t, kPi));
            c.add(gate_h(t));
            break;
        case ToffoliStyle::CnotNetwork:
            // Textbook 6-CNOT network with T = RZ(pi/4); equals the Toffoli
            // up to the e^{i pi/8} left over because the set has no bare
            // phase gate.
            c.add(gate_h(t));
            c.add(gate_cnot(b, t));
            c.add(gate_rz(t, -kPi / 4));
            c.add(gate_cnot(a, t));
            c.add(gate_rz(t, kPi / 4));
            c.add(gate_cnot(b, t));
            c.add(gate_rz(t, -kPi / 4));
            c.add(gate_cnot(a, t));
            c.add(gate_rz(b, kPi / 4));
            c.add(gate_rz(t, kPi / 4));
            c.add(gate_cnot(a, b));
            c.add(gate_h(t));
            c.add(gate_rz(a, kPi / 4));
            c.add(gate_rz(b, -kPi / 4));
            c.add(gate_cnot(a, b));
            break;
    }
    return c;
}

Circuit expand_toffolis(const Circuit& circuit, ToffoliStyle style) {
    if (style == ToffoliStyle::Native) return circuit;
    Circuit out(circuit.qubit_count, circuit.label);
    const Circuit repl = compile_toffoli(style);
    for (const Gate& g : circuit.gates) {
        if (g.kind != GateKind::TOFFOLI) {
            out.add(g);
            continue;
        }
        for (int ci = 0; ci < 2; ++ci)
            if (g.control_on_zero(ci)) out.add(gate_x(g.qubits[ci]));
        out.append(repl, {g.qubits[0], g.qubits[1], g.qubits[2]});
        for (int ci = 0; ci < 2; ++ci)
            if (g.control_on_zero(ci)) out.add(gate_x(g.qubits[ci]));
    }
    return out;
}

ResourceCount resource_count(const Circuit& circuit) {
    ResourceCount rc;
    std::vector<int> frontier(circuit.qubit_count, 0);
    for (const Gate& g : circuit.gates) {
        rc.by_name[gate_name(g.kind)] += 1;
        if (g.kind == GateKind::ORACLE) {
            rc.oracle += 1;
        } else {
            switch (g.qubit_count()) {
                case 1: rc.one_qubit += 1; break;
                case 2: rc.two_qubit += 1; break;
                case 3: rc.three_qubit += 1; break;
                default: break;
            }
        }
        int layer = 0;
        for (int q : g.qubits) layer = std::max(layer, frontier[q]);
        for (int q : g.qubits) frontier[q] = layer + 1;
        rc.depth = std::max(rc.depth, layer + 1);
    }
    rc.two_qubit_equivalents = rc.two_qubit + 6 * rc.three_qubit;
    return rc;
}

} // namespace dgt
