#pragma once

#include <cstdint>
#include <vector>

namespace dgt {

/// In-place Walsh-Hadamard transform (unnormalized), length a power of two.
void walsh_hadamard(std::vector<double>& data);

/// Coefficients a of diag = sum_alpha a_alpha Z_alpha: the normalized WHT of
/// the diagonal, indexed by the Z-mask alpha in basis-index bit positions.
std::vector<double> pauli_z_coefficients(const std::vector<double>& diagonal);

/// Lower regularized incomplete gamma P(a, x); Q = 1 - P.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Survival p-value of a chi-square statistic with dof degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

/// cos/sin of `angle` via the repeated-squaring recurrence: start from the
/// second-order expansion of e^{i angle / R}, R = 2^r, and square r times.
/// The error decreases as 1/R.
struct CosSin {
    double cos = 1.0;
    double sin = 0.0;
};
CosSin trig_by_repeated_squaring(double angle, int r);

} // namespace dgt
