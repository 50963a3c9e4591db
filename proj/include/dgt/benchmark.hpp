#pragma once

#include <functional>

#include "dgt/circuit.hpp"
#include "dgt/rng.hpp"
#include "dgt/simulate.hpp"

namespace dgt {

/// Process matrix in the q-qubit Pauli-product basis (I, X, Y, Z digits,
/// qubit 0 most significant), normalized so the identity channel is a
/// single unit entry at (I..I, I..I).
struct ChiMatrix {
    int qubits = 0;
    Eigen::MatrixXcd entries; // 4^q x 4^q
};

/// Dense matrix of one Pauli string; `digits` is the base-4 label.
Eigen::MatrixXcd pauli_string(int qubits, int label);

/// chi of an ideal unitary: the rank-1 outer product of its Pauli
/// coefficients.
ChiMatrix chi_of_unitary(const Eigen::MatrixXcd& u);

/// chi of a circuit under the depolarizing noise model, computed exactly
/// from the channel's action on a matrix-unit basis.
ChiMatrix chi_of_noisy_circuit(const Circuit& circuit, const NoiseModel& noise);

/// f = Re Tr(chi_target^dag chi), clipped into [0, 1].
double process_fidelity(const ChiMatrix& chi, const ChiMatrix& target);

/// Bisect the two-qubit depolarizing strength until the circuit's process
/// fidelity against its ideal chi hits `target_fidelity`.
double calibrate_depolarizing(const Circuit& circuit, double target_fidelity,
                              double p_low, double p_high, int iterations = 60);

// -- readout ------------------------------------------------------------------

/// Column-stochastic confusion matrix C[observed][prepared].
using ConfusionMatrix = Eigen::MatrixXd;

/// Tensor power of a symmetric single-qubit flip channel.
ConfusionMatrix symmetric_flip_confusion(int qubits, double flip_probability);

struct MitigationResult {
    Eigen::VectorXd distribution;
    double condition_number = 0.0;
};

/// C^{-1} raw followed by clipping to the probability simplex.
MitigationResult mitigate_readout(const Eigen::VectorXd& raw,
                                  const ConfusionMatrix& confusion);

// -- multiplication-gate accuracy ----------------------------------------------

struct AccuracyReport {
    double mean_accuracy = 0.0;
    double stddev = 0.0;
    double majority_mean = 0.0;
    double majority_stddev = 0.0;
    std::vector<double> per_pair_probability; // exact p(correct) per input pair
};

/// For every input basis pair simulate the noisy multiplication circuit,
/// sample `shots` outcomes, and score the fraction matching the group
/// oracle; windows of `majority_window` shots vote when the window is > 1.
AccuracyReport multiplication_accuracy(int N, const NoiseModel& noise, int shots,
                                       int majority_window, std::uint64_t seed,
                                       ToffoliStyle style = ToffoliStyle::CcphaseNative);

/// Sample index from a distribution (linear scan; distributions are small).
int sample_index(const Eigen::VectorXd& distribution, CounterRng& rng);

} // namespace dgt
