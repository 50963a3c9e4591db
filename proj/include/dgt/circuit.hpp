#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgt {

enum class GateKind {
    X,
    H,
    RZ,      // e^{-i theta Z / 2}
    RX,      // e^{-i theta X / 2}, theta restricted to multiples of pi/2
    CNOT,
    CZ,
    CPHASE,  // diag(1,1,1,e^{i theta})
    SWAP,
    XY,      // e^{i theta (XX+YY)/4}: rotation in the |01>,|10> subspace
    TOFFOLI,
    CCPHASE, // e^{i theta} on the triply-selected basis state
    ORACLE,  // classical permutation or diagonal phase table
};

/// Payload of an ORACLE gate.  Permutation tables act on the gate's qubit
/// tuple read MSB-first; diagonal tables hold one phase angle per basis
/// state of that tuple.
struct OracleTable {
    bool diagonal = false;
    std::vector<std::uint64_t> permutation; // size 2^k, a bijection
    std::vector<double> phases;             // size 2^k, radians
    std::string label;
};

/// One gate of the IR.  `qubits` lists controls first (count fixed by the
/// kind), then targets; `on_zero[c]` flips the polarity of control c.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> qubits;
    std::vector<bool> on_zero; // one entry per control; empty means all on-1
    double theta = 0.0;
    std::shared_ptr<const OracleTable> oracle;

    int control_count() const;
    int qubit_count() const { return static_cast<int>(qubits.size()); }
    bool is_parameterized() const;
    bool control_on_zero(int c) const {
        return c < static_cast<int>(on_zero.size()) && on_zero[c];
    }
};

const char* gate_name(GateKind kind);

// Constructors validate index distinctness and parameter constraints.
Gate gate_x(int q);
Gate gate_h(int q);
Gate gate_rz(int q, double theta);
Gate gate_rx(int q, double theta);
Gate gate_cnot(int control, int target, bool on_zero = false);
Gate gate_cz(int a, int b, bool a_on_zero = false, bool b_on_zero = false);
Gate gate_cphase(int a, int b, double theta, bool a_on_zero = false,
                 bool b_on_zero = false);
Gate gate_swap(int a, int b);
Gate gate_xy(int a, int b, double theta);
Gate gate_toffoli(int c1, int c2, int target, bool c1_on_zero = false,
                  bool c2_on_zero = false);
Gate gate_ccphase(int a, int b, int c, double theta, bool a_on_zero = false,
                  bool b_on_zero = false, bool c_on_zero = false);
Gate gate_oracle(std::vector<int> qubits, std::shared_ptr<const OracleTable> table);

/// An ordered list of gates on `qubit_count` wires.
struct Circuit {
    int qubit_count = 0;
    std::vector<Gate> gates;
    std::string label;

    Circuit() = default;
    explicit Circuit(int qubits, std::string name = {})
        : qubit_count(qubits), label(std::move(name)) {}

    Circuit& add(Gate g);
    /// Append another circuit, remapping its qubit i to `mapping[i]`.
    Circuit& append(const Circuit& other, const std::vector<int>& mapping);
    Circuit& append(const Circuit& other);
};

/// Reverse gate order, negating parameters; self-inverse gates pass through
/// and oracle tables are inverted.
Circuit adjoint(const Circuit& circuit);

/// Wrap a gate or circuit with one extra control.  The result acts as the
/// original unitary on the subspace selected by the control (|1> unless
/// `on_zero`) and as the identity elsewhere, exactly.
Circuit controlled(const Gate& gate, int control, bool on_zero = false);
Circuit controlled(const Circuit& circuit, int control, bool on_zero = false);

/// Append the composite realizing R_y(theta) = e^{-i theta Y / 2} on qubit q.
void add_ry(Circuit& c, int q, double theta);

enum class ToffoliStyle { Native, CcphaseNative, CnotNetwork };

/// Three-qubit circuit realizing the Toffoli on qubits (0, 1, 2).
/// CcphaseNative conjugates one CCPHASE(pi) by Hadamards; CnotNetwork is the
/// 6-CNOT textbook network (equal to the Toffoli up to a global phase, the
/// closest the RZ-based gate set can come).
Circuit compile_toffoli(ToffoliStyle style);

/// Replace every TOFFOLI gate by the chosen style (Native is a no-op).
/// Polarity controls are folded in with X conjugation.
Circuit expand_toffolis(const Circuit& circuit, ToffoliStyle style);

struct ResourceCount {
    std::map<std::string, int> by_name;
    int one_qubit = 0;
    int two_qubit = 0;
    int three_qubit = 0;
    int oracle = 0;                // reported separately, never converted
    int two_qubit_equivalents = 0; // two_qubit + 6 * three_qubit
    int depth = 0;
};

ResourceCount resource_count(const Circuit& circuit);

} // namespace dgt
