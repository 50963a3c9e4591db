#include "dgt/numeric.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dgt {

void walsh_hadamard(std::vector<double>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)))
        throw std::domain_error("walsh_hadamard needs a power-of-two length");
    for (std::size_t half = 1; half < n; half <<= 1)
        for (std::size_t base = 0; base < n; base += 2 * half)
            for (std::size_t i = base; i < base + half; ++i) {
                const double a = data[i], b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
}

std::vector<double> pauli_z_coefficients(const std::vector<double>& diagonal) {
    std::vector<double> coeff = diagonal;
    walsh_hadamard(coeff);
    const double scale = 1.0 / static_cast<double>(diagonal.size());
    for (double& c : coeff) c *= scale;
    return coeff;
}

namespace {

// Series and continued-fraction evaluations of the regularized incomplete
// gamma function, after Numerical Recipes.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1e308;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-290) d = 1e-290;
        c = b + an / c;
        if (std::abs(c) < 1e-290) c = 1e-290;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_p arguments out of range");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

double chi_square_pvalue(double statistic, int dof) {
    if (dof < 1) throw std::domain_error("chi_square_pvalue needs dof >= 1");
    return gamma_q(0.5 * dof, 0.5 * statistic);
}

CosSin trig_by_repeated_squaring(double angle, int r) {
    if (r < 1) throw std::domain_error("repeated squaring needs r >= 1");
    const double step = angle / static_cast<double>(1ull << r);
    std::complex<double> z(1.0 - 0.5 * step * step, step);
    for (int i = 0; i < r; ++i) z *= z;
    return {z.real(), z.imag()};
}

} // namespace dgt
