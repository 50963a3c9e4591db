#pragma once

#include <Eigen/Dense>

#include "dgt/circuit.hpp"
#include "dgt/group.hpp"

namespace dgt {

using StateVector = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;
using DensityMatrix = Eigen::MatrixXcd;

/// Qubit 0 is the most significant bit of basis-state labels, so |m>|k>
/// reads left to right.  Dense simulation is capped at 16 qubits.
inline constexpr int kMaxSimQubits = 16;

StateVector basis_state(int qubit_count, std::uint64_t index);

/// Apply one gate / a whole circuit to a state vector.
void apply_gate(const Gate& gate, int qubit_count, StateVector& state);
StateVector apply(const Circuit& circuit, StateVector state);

/// Exact product of the circuit's gate matrices, built column by column.
DenseOperator unitary_of(const Circuit& circuit);

/// Dense matrix of a single gate embedded in `qubit_count` wires.
DenseOperator gate_unitary(const Gate& gate, int qubit_count);

/// Simulate a circuit that carries scratch wires beyond `data_qubits`:
/// every ancilla starts in |0>, must return to |0> on every basis input
/// (checked to `tol`), and the returned operator acts on the data block.
DenseOperator unitary_on_data(const Circuit& circuit, int data_qubits,
                              double tol = 1e-9);

/// max |U - e^{i phi} V| with phi chosen to align the largest-magnitude
/// entries of U and V.
double max_abs_diff_up_to_phase(const DenseOperator& u, const DenseOperator& v);
double max_abs_diff(const DenseOperator& u, const DenseOperator& v);

/// Exact action of a basis-preserving circuit (permutation gates and
/// diagonal phases only) on one computational basis state.  No width cap:
/// circuits too wide for dense simulation still trace exactly.  Throws if
/// the circuit contains an amplitude-mixing gate (H, RX, XY).
struct BasisAction {
    std::uint64_t index = 0;
    Complex phase = 1.0;
};
BasisAction basis_action(const Circuit& circuit, std::uint64_t input);

// -- density-matrix path (noise) ---------------------------------------------

DensityMatrix density_from_state(const StateVector& state);
void apply_gate_density(const Gate& gate, int qubit_count, DensityMatrix& rho);

/// Depolarizing channel of strength p on the listed qubits:
/// rho -> (1-p) rho + p Tr_A(rho) (x) I/2^k.
void depolarize(DensityMatrix& rho, int qubit_count, const std::vector<int>& qubits,
                double p);

/// Depolarizing noise attached to every multi-qubit gate.
struct NoiseModel {
    double p_two_qubit = 0.0;
    double p_three_qubit = 0.0;
};

/// Run a circuit on a density matrix, inserting a depolarizing channel on the
/// support of every 2- and 3-qubit gate.  ORACLE gates are treated as ideal.
DensityMatrix apply_noisy(const Circuit& circuit, DensityMatrix rho,
                          const NoiseModel& noise);

/// Measurement distribution of a density matrix in the computational basis.
Eigen::VectorXd measurement_distribution(const DensityMatrix& rho);

} // namespace dgt
