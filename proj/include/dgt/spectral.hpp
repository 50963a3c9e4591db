#pragma once

#include <Eigen/Dense>

#include "dgt/group.hpp"

namespace dgt {

/// Nonabelian Fourier matrix of D_N.  Row r holds the entry function of
/// row_order[r] scaled by sqrt(d_rho / 2N); columns follow the element
/// index N*m + k.
struct FourierMatrix {
    int N = 0;
    Eigen::MatrixXcd entries;
    std::vector<IrrepLabel> row_order;
};

FourierMatrix fourier_matrix(int N);

/// Computational-basis index a Fourier label occupies at the output of the
/// Fourier circuit: the four 1-d irreps sit on |m p 0...0>, the 2-d entries
/// (i,0) on |i 0>|l> and (i,1) on |1-i 1>|N/2 - l>.
int fourier_basis_index(const IrrepLabel& label, int N);

/// Fourier matrix with rows moved to their circuit basis positions.
Eigen::MatrixXcd fourier_matrix_circuit_order(int N);

/// M_{(m',k');(m,k)} = 2 delta_{m,m'} cos(2 pi (k'-k)/N).
Eigen::MatrixXd m_matrix(int N);

struct TransferMatrix {
    int N = 0;
    double beta = 0.0;
    Eigen::MatrixXd entries; // elementwise exp(beta * M)
};

TransferMatrix transfer_matrix(int N, double beta);

struct FourierDiagonalization {
    Eigen::VectorXcd diagonal; // in fourier row order
    double offdiag_max = 0.0;
};

/// F T F^dag with the off-diagonal residual reported.
FourierDiagonalization diagonalize_via_fourier(int N, double beta);

/// Closed-form eigenvalues of T in the same row order.  The rho_c/rho_d
/// entry is the plain alternating character sum (not its square).
Eigen::VectorXcd closed_form_diagonal(int N, double beta);

/// Single-link kinetic evolution exp(i theta M), computed both directly and
/// through the Fourier factorization F^dag D F; the two routes must agree
/// to 1e-10 or an internal-consistency error is thrown.
Eigen::MatrixXcd kinetic_step(int N, double theta);

/// Eigenvalues of M ordered by circuit basis index (diagonal of F M F^dag
/// after the row permutation).
Eigen::VectorXd kinetic_eigenvalues_circuit_order(int N);

} // namespace dgt
