#include "dgt/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dgt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_n(int N, int cap) {
    if (!is_power_of_two(N) || N < 2) throw std::domain_error("N must be a power of two");
    if (N > cap) throw std::domain_error("N exceeds desk-scale cap");
}
} // namespace

FourierMatrix fourier_matrix(int N) {
    check_n(N, 64);
    FourierMatrix f;
    f.N = N;
    f.row_order = irrep_labels(N);
    f.entries.resize(2 * N, 2 * N);
    for (int r = 0; r < 2 * N; ++r) {
        const IrrepLabel& label = f.row_order[r];
        const double scale = std::sqrt(irrep_dimension(label) / (2.0 * N));
        for (int c = 0; c < 2 * N; ++c)
            f.entries(r, c) = scale * irrep_value(label, element_from_index(c, N));
    }
    return f;
}

int fourier_basis_index(const IrrepLabel& label, int N) {
    switch (label.kind) {
        case IrrepKind::A: return 0;
        case IrrepKind::B: return N;
        case IrrepKind::C: return N / 2;
        case IrrepKind::D: return N + N / 2;
        case IrrepKind::TwoDim:
            if (label.j == 0) return label.i * N + label.l;
            return (1 - label.i) * N + N / 2 + (N / 2 - label.l);
    }
    throw std::logic_error("unhandled label kind");
}

Eigen::MatrixXcd fourier_matrix_circuit_order(int N) {
    const FourierMatrix f = fourier_matrix(N);
    Eigen::MatrixXcd out(2 * N, 2 * N);
    for (int r = 0; r < 2 * N; ++r)
        out.row(fourier_basis_index(f.row_order[r], N)) = f.entries.row(r);
    return out;
}

Eigen::MatrixXd m_matrix(int N) {
    check_n(N, 64);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int mp = 0; mp < 2; ++mp)
        for (int kp = 0; kp < N; ++kp)
            for (int k = 0; k < N; ++k)
                m(mp * N + kp, mp * N + k) = 2.0 * std::cos(kTwoPi * (kp - k) / N);
    return m;
}

TransferMatrix transfer_matrix(int N, double beta) {
    if (!std::isfinite(beta)) throw std::domain_error("beta must be finite");
    TransferMatrix t;
    t.N = N;
    t.beta = beta;
    t.entries = (beta * m_matrix(N)).array().exp();
    return t;
}

FourierDiagonalization diagonalize_via_fourier(int N, double beta) {
    const FourierMatrix f = fourier_matrix(N);
    const TransferMatrix t = transfer_matrix(N, beta);
    const Eigen::MatrixXcd ftf =
        f.entries * t.entries.cast<Complex>() * f.entries.adjoint();
    FourierDiagonalization out;
    out.diagonal = ftf.diagonal();
    Eigen::MatrixXcd off = ftf;
    off.diagonal().setZero();
    out.offdiag_max = off.cwiseAbs().maxCoeff();
    return out;
}

Eigen::VectorXcd closed_form_diagonal(int N, double beta) {
    check_n(N, 64);
    double plain = 0.0, alternating = 0.0;
    std::vector<Complex> twisted(N / 2); // sum_k e^{i 2 pi l k/N} e^{2 beta cos}
    for (int k = 0; k < N; ++k) {
        const double w = std::exp(2.0 * beta * std::cos(kTwoPi * k / N));
        plain += w;
        alternating += (k % 2 ? -1.0 : 1.0) * w;
        for (int l = 1; l < N / 2; ++l)
            twisted[l] += std::polar(1.0, kTwoPi * l * k / N) * w;
    }
    Eigen::VectorXcd diag(2 * N);
    diag(0) = N + plain;
    diag(1) = plain - N;
    diag(2) = alternating;
    diag(3) = alternating;
    int r = 4;
    for (int l = 1; l < N / 2; ++l) {
        diag(r++) = twisted[l];            // (0,0)
        diag(r++) = std::conj(twisted[l]); // (0,1)
        diag(r++) = twisted[l];            // (1,0)
        diag(r++) = std::conj(twisted[l]); // (1,1)
    }
    return diag;
}

Eigen::MatrixXcd kinetic_step(int N, double theta) {
    check_n(N, 32);
    const Eigen::MatrixXd m = m_matrix(N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    const Eigen::MatrixXcd direct =
        eig.eigenvectors().cast<Complex>() *
        (Complex(0, theta) * eig.eigenvalues().cast<Complex>().array())
            .exp()
            .matrix()
            .asDiagonal() *
        eig.eigenvectors().transpose().cast<Complex>();

    const FourierMatrix f = fourier_matrix(N);
    const Eigen::MatrixXcd rotated = f.entries * direct * f.entries.adjoint();
    Eigen::MatrixXcd off = rotated;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error("kinetic operator not diagonal in the Fourier basis");
    const Eigen::MatrixXcd factored = f.entries.adjoint() *
                                      rotated.diagonal().asDiagonal() * f.entries;
    if ((factored - direct).cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error("kinetic evolution routes disagree");
    return factored;
}

Eigen::VectorXd kinetic_eigenvalues_circuit_order(int N) {
    const Eigen::MatrixXcd f = fourier_matrix_circuit_order(N);
    const Eigen::MatrixXcd rotated = f * m_matrix(N).cast<Complex>() * f.adjoint();
    return rotated.diagonal().real();
}

} // namespace dgt
