#include "dgt/benchmark.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "dgt/gates.hpp"
#include "dgt/group.hpp"

namespace dgt {

Eigen::MatrixXcd pauli_string(int qubits, int label) {
    using Mat2 = Eigen::Matrix2cd;
    Mat2 table[4];
    table[0] << 1, 0, 0, 1;
    table[1] << 0, 1, 1, 0;
    table[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    table[3] << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < qubits; ++q) {
        const int digit = (label >> (2 * (qubits - 1 - q))) & 3;
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        next.topLeftCorner(out.rows(), out.cols()) = table[digit](0, 0) * out;
        next.topRightCorner(out.rows(), out.cols()) = table[digit](0, 1) * out;
        next.bottomLeftCorner(out.rows(), out.cols()) = table[digit](1, 0) * out;
        next.bottomRightCorner(out.rows(), out.cols()) = table[digit](1, 1) * out;
        out.swap(next);
    }
    return out;
}

namespace {

void check_chi_size(int qubits) {
    if (qubits < 1 || qubits > 3)
        throw std::length_error("chi matrices capped at 3 qubits (64-d Pauli basis)");
}

int qubits_of_dim(Eigen::Index dim) {
    int q = 0;
    while ((1ll << q) < dim) ++q;
    return q;
}

} // namespace

ChiMatrix chi_of_unitary(const Eigen::MatrixXcd& u) {
    const int q = qubits_of_dim(u.rows());
    check_chi_size(q);
    const int basis = 1 << (2 * q);
    Eigen::VectorXcd coeff(basis);
    for (int i = 0; i < basis; ++i)
        coeff[i] = (pauli_string(q, i).adjoint() * u).trace() / std::pow(2.0, q);
    ChiMatrix chi;
    chi.qubits = q;
    chi.entries = coeff * coeff.adjoint();
    return chi;
}

ChiMatrix chi_of_noisy_circuit(const Circuit& circuit, const NoiseModel& noise) {
    const int q = circuit.qubit_count;
    check_chi_size(q);
    const Eigen::Index dim = 1ll << q;
    const Eigen::Index basis = dim * dim;

    // K[(r,a),(s,b)] = <r| E(|a><b|) |s>, the Choi matrix with row index
    // (r,a); chi is its Pauli-coordinate form.
    Eigen::MatrixXcd choi(basis, basis);
    for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index b = 0; b < dim; ++b) {
            DensityMatrix unit = DensityMatrix::Zero(dim, dim);
            unit(a, b) = 1.0;
            const DensityMatrix mapped = apply_noisy(circuit, unit, noise);
            for (Eigen::Index r = 0; r < dim; ++r)
                for (Eigen::Index s = 0; s < dim; ++s)
                    choi(r * dim + a, s * dim + b) = mapped(r, s);
        }

    Eigen::MatrixXcd paulis(basis, basis); // column i = vec(P_i)
    for (Eigen::Index i = 0; i < basis; ++i) {
        const Eigen::MatrixXcd p = pauli_string(q, static_cast<int>(i));
        for (Eigen::Index r = 0; r < dim; ++r)
            for (Eigen::Index a = 0; a < dim; ++a)
                paulis(r * dim + a, i) = p(r, a);
    }

    ChiMatrix chi;
    chi.qubits = q;
    chi.entries = (paulis.adjoint() * choi * paulis) / static_cast<double>(basis);
    return chi;
}

double process_fidelity(const ChiMatrix& chi, const ChiMatrix& target) {
    if (chi.entries.rows() != target.entries.rows())
        throw std::domain_error("chi dimension mismatch");
    const double f = (target.entries.adjoint() * chi.entries).trace().real();
    return std::min(1.0, std::max(0.0, f));
}

double calibrate_depolarizing(const Circuit& circuit, double target_fidelity,
                              double p_low, double p_high, int iterations) {
    const ChiMatrix ideal = chi_of_unitary(unitary_of(circuit));
    auto fidelity_at = [&](double p) {
        return process_fidelity(chi_of_noisy_circuit(circuit, {p, p}), ideal);
    };
    if (fidelity_at(p_low) < target_fidelity || fidelity_at(p_high) > target_fidelity)
        throw std::domain_error("target fidelity not bracketed");
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (p_low + p_high);
        (fidelity_at(mid) >= target_fidelity ? p_low : p_high) = mid;
    }
    return 0.5 * (p_low + p_high);
}

ConfusionMatrix symmetric_flip_confusion(int qubits, double flip_probability) {
    if (flip_probability < 0.0 || flip_probability > 1.0)
        throw std::domain_error("flip probability outside [0,1]");
    Eigen::Matrix2d single;
    single << 1.0 - flip_probability, flip_probability, flip_probability,
        1.0 - flip_probability;
    ConfusionMatrix c = ConfusionMatrix::Identity(1, 1);
    for (int q = 0; q < qubits; ++q) {
        ConfusionMatrix next(c.rows() * 2, c.cols() * 2);
        next.topLeftCorner(c.rows(), c.cols()) = single(0, 0) * c;
        next.topRightCorner(c.rows(), c.cols()) = single(0, 1) * c;
        next.bottomLeftCorner(c.rows(), c.cols()) = single(1, 0) * c;
        next.bottomRightCorner(c.rows(), c.cols()) = single(1, 1) * c;
        c.swap(next);
    }
    return c;
}

MitigationResult mitigate_readout(const Eigen::VectorXd& raw,
                                  const ConfusionMatrix& confusion) {
    if (confusion.rows() != confusion.cols() || confusion.rows() != raw.size())
        throw std::domain_error("confusion matrix shape mismatch");
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(confusion, Eigen::ComputeThinU |
                                                               Eigen::ComputeThinV);
    const double smallest = svd.singularValues().tail(1)(0);
    if (smallest < 1e-12) throw std::domain_error("confusion matrix is singular");
    MitigationResult out;
    out.condition_number = svd.singularValues()(0) / smallest;
    Eigen::VectorXd solved = svd.solve(raw);
    solved = solved.cwiseMax(0.0);
    const double total = solved.sum();
    if (total > 0.0) solved /= total;
    out.distribution = solved;
    return out;
}

int sample_index(const Eigen::VectorXd& distribution, CounterRng& rng) {
    double u = rng.next_double() * distribution.sum();
    for (Eigen::Index i = 0; i < distribution.size(); ++i) {
        u -= distribution[i];
        if (u <= 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(distribution.size() - 1);
}

AccuracyReport multiplication_accuracy(int N, const NoiseModel& noise, int shots,
                                       int majority_window, std::uint64_t seed,
                                       ToffoliStyle style) {
    const Circuit circuit =
        N == 4 ? expand_toffolis(build_multiplication_d4(), style)
               : build_multiplication(N, style);
    const Eigen::MatrixXi table = group_table(N);
    const int n_elem = 2 * N;
    int n = 0;
    while ((1 << n) < N) ++n;
    const int data_qubits = 2 * (n + 1);
    const std::int64_t pad = 1ll << (circuit.qubit_count - data_qubits);
    const std::int64_t dim = 1ll << circuit.qubit_count;

    AccuracyReport report;
    report.per_pair_probability.reserve(static_cast<std::size_t>(n_elem) * n_elem);

    std::vector<double> raw_scores, majority_scores;
    CounterRng shot_rng(seed, 1);

    for (int g = 0; g < n_elem; ++g)
        for (int h = 0; h < n_elem; ++h) {
            const std::int64_t input = (static_cast<std::int64_t>(g) * n_elem + h) * pad;
            const std::int64_t expected =
                static_cast<std::int64_t>(g) * n_elem + table(g, h);
            DensityMatrix rho = DensityMatrix::Zero(dim, dim);
            rho(input, input) = 1.0;
            rho = apply_noisy(circuit, rho, noise);
            const Eigen::VectorXd full_dist = measurement_distribution(rho);
            // Scratch wires are not read out; marginalize them away.
            Eigen::VectorXd dist = Eigen::VectorXd::Zero(1ll << data_qubits);
            for (std::int64_t d = 0; d < dist.size(); ++d)
                for (std::int64_t s = 0; s < pad; ++s) dist[d] += full_dist[d * pad + s];
            report.per_pair_probability.push_back(dist[expected]);

            // Raw accuracy: fraction of correct shots.
            int correct = 0;
            std::vector<int> outcomes(shots);
            for (int s = 0; s < shots; ++s) {
                outcomes[s] = sample_index(dist, shot_rng);
                if (outcomes[s] == expected) ++correct;
            }
            raw_scores.push_back(static_cast<double>(correct) / shots);

            // Majority vote over successive windows.
            if (majority_window > 1 && shots >= majority_window) {
                const int windows = shots / majority_window;
                int correct_windows = 0;
                for (int w = 0; w < windows; ++w) {
                    std::map<int, int> counts;
                    for (int s = 0; s < majority_window; ++s)
                        counts[outcomes[w * majority_window + s]] += 1;
                    int best = -1, best_count = -1;
                    for (const auto& [outcome, count] : counts)
                        if (count > best_count) {
                            best = outcome;
                            best_count = count;
                        }
                    if (best == expected) ++correct_windows;
                }
                majority_scores.push_back(static_cast<double>(correct_windows) / windows);
            }
        }

    auto mean_std = [](const std::vector<double>& xs) {
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= xs.empty() ? 1 : xs.size();
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= xs.empty() ? 1 : xs.size();
        return std::pair<double, double>(mean, std::sqrt(var));
    };
    std::tie(report.mean_accuracy, report.stddev) = mean_std(raw_scores);
    if (!majority_scores.empty())
        std::tie(report.majority_mean, report.majority_stddev) = mean_std(majority_scores);
    return report;
}

} // namespace dgt
