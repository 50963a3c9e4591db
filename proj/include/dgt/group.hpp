#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dgt {

using Complex = std::complex<double>;

/// Element s^m r^k of the dihedral group D_N, N = 2^n.  The group order
/// parameter N travels with the element so mixed-N arithmetic fails loudly
/// at runtime instead of corrupting silently.
struct GroupElement {
    int m = 0; ///< reflection exponent, 0 or 1
    int k = 0; ///< rotation exponent in [0, N)
    int N = 2; ///< rotation order, power of two >= 2

    bool operator==(const GroupElement&) const = default;
};

bool is_power_of_two(int n);

GroupElement identity(int N);
GroupElement make_element(int m, int k, int N);

/// s^{m1} r^{k1} . s^{m2} r^{k2} = s^{m1+m2} r^{N m2 + (-1)^{m2} k1 + k2}
GroupElement multiply(const GroupElement& g, const GroupElement& h);

/// (s^m r^k)^{-1} = s^m r^{(N-k)(1-m) + m k}
GroupElement inverse(const GroupElement& g);

/// Fundamental 2x2 representation X^m diag(w, conj(w))^k with w = e^{2 pi i/N}.
Eigen::Matrix2cd fundamental_rep(const GroupElement& g);

/// Re Tr of the fundamental representation: 2 (1-m) cos(2 pi k / N).
double re_trace(const GroupElement& g);

/// Linear element index N*m + k and its inverse.
int element_index(const GroupElement& g);
GroupElement element_from_index(int index, int N);

/// Binary encoding |m>|k_{n-1}...k_0> as a string of n+1 '0'/'1' chars.
std::string encode(const GroupElement& g);
GroupElement decode(const std::string& bits, int N);

/// Full 2N x 2N multiplication table: table(i, j) = index of g_i . g_j.
Eigen::MatrixXi group_table(int N);

// -- irreducible representations (even N) ------------------------------------

enum class IrrepKind { A, B, C, D, TwoDim };

/// Label of one Fourier-basis row: one of the four 1-d irreps, or matrix
/// entry (i, j) of the 2-d irrep phi^(l), 1 <= l < N/2.
struct IrrepLabel {
    IrrepKind kind = IrrepKind::A;
    int l = 0; ///< TwoDim only
    int i = 0; ///< TwoDim row bit
    int j = 0; ///< TwoDim column bit

    bool operator==(const IrrepLabel&) const = default;
};

int irrep_dimension(const IrrepLabel& label);

/// The +-1 character of a 1-d irrep.
double one_dim_irrep(IrrepKind kind, const GroupElement& g);

/// phi^(l)(s^m r^k) = X^m diag(e^{2 pi i l k/N}, e^{-2 pi i l k/N}).
Eigen::Matrix2cd two_dim_irrep(int l, const GroupElement& g);

/// Single matrix entry [rho(g)]_{ij} for any label (1-d labels ignore i, j).
Complex irrep_value(const IrrepLabel& label, const GroupElement& g);

/// All irrep entry labels for D_N: A, B, C, D, then for each l the entries
/// (0,0), (0,1), (1,0), (1,1).  This is the row order used throughout.
std::vector<IrrepLabel> irrep_labels(int N);

} // namespace dgt
