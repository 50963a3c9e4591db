#pragma once

#include <vector>

#include "dgt/circuit.hpp"
#include "dgt/group.hpp"
#include "dgt/rng.hpp"
#include "dgt/simulate.hpp"

namespace dgt {

// -- single-plaquette real-time system ----------------------------------------

/// Four links around one plaquette plus an (n+1)-qubit work register; the
/// kinetic and potential couplings stay free parameters.
struct PlaquetteSystem {
    int N = 4;
    double theta_k = 1.0;
    double theta_v = 0.8;

    int link_qubits() const;  // 4 (n+1)
    int total_qubits() const; // link_qubits() + work register
};

/// Second-order split step: half potential phase, per-link kinetic factor
/// rotated diagonal by the Fourier gate, half potential phase.  Approximates
/// exp(i dt H) with H = assemble_hamiltonian(system).
Circuit trotter_step(const PlaquetteSystem& system, double dt);

/// theta_k * sum_links (M - tr M / 2N) + theta_v * Re Tr(plaquette) as a
/// dense real symmetric matrix over the link qubits (work register
/// excluded; the kinetic generator is centered because the circuit cannot
/// carry a bare global phase).
Eigen::MatrixXd assemble_hamiltonian(const PlaquetteSystem& system);

/// exp(i t H), dense (feasible for N = 2; heavy at N = 4).
DenseOperator exact_evolve(const PlaquetteSystem& system, double t);

/// Cached eigendecomposition for repeated exact evolutions of states.
class ExactEvolver {
public:
    explicit ExactEvolver(const PlaquetteSystem& system);
    StateVector evolve(double t, const StateVector& state) const;
    int qubits() const { return qubits_; }

private:
    int qubits_;
    Eigen::MatrixXd vectors_;
    Eigen::VectorXd values_;
};

/// Apply the trotter circuit to a link-register state (work register and
/// scratch padded with |0> and checked on return).
StateVector apply_to_links(const Circuit& circuit, const PlaquetteSystem& system,
                           const StateVector& link_state);

// -- Euclidean Monte Carlo -----------------------------------------------------

/// Periodic hypercubic lattice of D_N link variables with isotropic Wilson
/// coupling beta.
struct LatticeConfig {
    int N = 4;
    std::vector<int> dims;
    double beta = 1.0;
    std::uint64_t rng_seed = 0;
    std::uint64_t rng_stream = 0;
    std::vector<int> links; // element index per (site, direction)

    int site_count() const;
    int link_count() const { return static_cast<int>(links.size()); }
};

LatticeConfig make_cold_lattice(int N, std::vector<int> dims, double beta,
                                std::uint64_t seed, std::uint64_t stream = 0);

/// Mean over all plaquettes of Re Tr(U_p).
double measure_plaquette(const LatticeConfig& config);

/// One full sweep of single-link Metropolis updates with uniform proposals;
/// returns the acceptance rate.  The rng carries the chain state.
double metropolis_sweep(LatticeConfig& config, CounterRng& rng);

/// Exact Boltzmann average of the mean plaquette by full enumeration;
/// guarded at (2N)^links <= 1e8.
double exact_small_lattice_average(int N, const std::vector<int>& dims, double beta);

struct SweepPoint {
    double beta = 0.0;
    double plaquette_mean = 0.0;
    double plaquette_stderr = 0.0;
    double acceptance_rate = 0.0;
};

/// Independent chain per beta; jackknife errors over bins; deterministic
/// for a fixed seed.
std::vector<SweepPoint> beta_sweep(int N, const std::vector<int>& dims,
                                   const std::vector<double>& betas, int sweeps,
                                   int thermalization, std::uint64_t seed);

/// Jackknife standard error of the mean over equal bins.
double jackknife_stderr(const std::vector<double>& samples, int bins);

} // namespace dgt
