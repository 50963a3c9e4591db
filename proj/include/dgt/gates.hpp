#pragma once

#include <map>
#include <vector>

#include "dgt/circuit.hpp"
#include "dgt/group.hpp"

namespace dgt {

// Circuits below share one register convention: qubit 0 is the reflection
// bit m, qubits 1..n hold the rotation index k MSB-first, scratch qubits
// (when a builder needs them) come after all data registers and are
// returned to |0> on every basis input.

/// Flip all n rotation bits, controlled on the reflection qubit.
/// Exactly n CNOT gates.
Circuit build_controlled_ones_complement(int n, bool control_on_zero = true);

/// |k> -> |k+1 mod 2^n> on the rotation register, controlled on the
/// reflection qubit being |0>.  Ripple scheme, 2n-3 Toffolis for n >= 3
/// with n-2 carry scratch qubits.
Circuit build_controlled_increment(int n);
Circuit build_controlled_increment(int n, bool control_on_zero);

/// |m>|k> -> |m>|k'> with k' the rotation exponent of the inverse element.
Circuit build_inversion(int N);

/// Hand-simplified D_8 inversion: the rotation LSB is left untouched and
/// its complement folds into the increment's control polarity.
Circuit build_inversion_d8_simplified();

/// Controlled on qubit 0 being |1>, replace |k> with |2^n - k mod 2^n>.
Circuit build_conditional_twos_complement(int N);

/// |A>|B> -> |A+B mod 2^n>|B>.  Composed of the forward carry-ripple block
/// (whose cost is the quoted 20n-31 two-qubit equivalents) and a borrow
/// sweep that returns every carry qubit to |0>.
Circuit build_in_place_adder(int n);
/// Forward block alone (carries left set); exposed for resource assertions.
Circuit build_adder_forward(int n);

/// |g>|h> -> |g>|g h> on two (n+1)-qubit registers, plus n-1 shared
/// scratch qubits for n >= 2.
Circuit build_multiplication(int N, ToffoliStyle style = ToffoliStyle::Native);

/// Specialized six-qubit D_4 multiplication (five CNOTs and one Toffoli).
Circuit build_multiplication_d4();

/// |g>|h> -> |g>|h g>, derived as inversion / adjoint-multiplication /
/// inversion on the second register.
Circuit build_right_multiplication(int N, ToffoliStyle style = ToffoliStyle::Native);

/// Z-string coefficients of a real diagonal: diagonal = sum a_alpha Z_alpha.
/// Keys are qubit-subset masks in basis-index bit positions; zero
/// coefficients are dropped.
std::map<std::uint64_t, double> pauli_decompose_diagonal(
    const std::vector<double>& diagonal);

/// exp(i * angles[z] |z><z|) over the given qubits as RZ ladders.  The
/// identity component (mean angle) is unrepresentable without a bare phase
/// gate and is dropped; callers supply mean-free angle tables.
Circuit build_diagonal_phase(const std::vector<double>& angles,
                             const std::vector<int>& qubits, int qubit_count);

/// Diagonal gate |g> -> e^{i theta Re Tr g} |g>, exact, from the Pauli
/// decomposition of the trace diagonal.
Circuit build_trace_direct(int N, double theta);

/// |x> -> e^{i 2 theta x} |x> (up to global phase) for a b-bit fixed-point
/// register holding x in [0,1); one RZ per bit.
Circuit build_phase_kickback(int b, double theta);

/// b-bit fixed-point sine/cosine tables over the first quadrant, one entry
/// per value of the low n-2 rotation bits.
struct TrigTables {
    int value_bits = 0;
    std::vector<std::uint64_t> sin_bits;
    std::vector<std::uint64_t> cos_bits;
};

TrigTables make_trig_tables_exact(int N, int b);
/// Same tables from the repeated-squaring recurrence with R = 2^r.
TrigTables make_trig_tables_squaring(int N, int b, int r);

/// Ancilla-assisted trace gate: compute b-bit sin/cos tables reversibly
/// (ORACLE), kick back the phase with sign and quadrant branches selected
/// by the two leading rotation bits, then uncompute.  Phase-angle error
/// against build_trace_direct is bounded by 2 theta 2^{-b}.
Circuit build_trace_ancilla(int N, double theta, int b);
Circuit build_trace_ancilla(int N, double theta, int b, const TrigTables& tables);

/// Standard QFT on Z_{2^n}: |k> -> 2^{-n/2} sum_j e^{2 pi i j k / 2^n} |j>,
/// MSB-first register, explicit final swaps.
Circuit build_qft_cyclic(int n);

/// Change of basis from |m>|k-tilde> to the Fourier-basis encoding:
/// identity off the x = 0 sectors, conditional-phase gadget (one CCPHASE
/// and a scratch qubit) followed by a Hadamard mix of the reflection bit.
Circuit build_change_of_basis(int N);

/// Full Fourier gate: cyclic QFT on the rotation register, then the change
/// of basis.  Matches fourier_matrix_circuit_order(N) exactly.
Circuit build_fourier(int N);
/// Variant without the (identity) phase gadget and its scratch qubit.
Circuit build_fourier_lean(int N);

/// Phase e^{i theta Re Tr(U1 U2 U3^-1 U4^-1)} on four link registers, using
/// a work register (last n+1 data qubits) that starts and ends at |e>.
Circuit build_plaquette_trace(int N, double theta,
                              ToffoliStyle style = ToffoliStyle::Native);

/// Data-qubit counts (excluding scratch) for the builders above.
int plaquette_trace_data_qubits(int N);

} // namespace dgt
