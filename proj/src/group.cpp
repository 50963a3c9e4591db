#include "dgt/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dgt {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

static void check_order(int N) {
    if (N < 2 || !is_power_of_two(N))
        throw std::domain_error("group order must be a power of two >= 2, got " +
                                std::to_string(N));
}

GroupElement identity(int N) {
    check_order(N);
    return GroupElement{0, 0, N};
}

GroupElement make_element(int m, int k, int N) {
    check_order(N);
    if (m != 0 && m != 1) throw std::domain_error("reflection exponent must be 0 or 1");
    if (k < 0 || k >= N) throw std::domain_error("rotation exponent out of range");
    return GroupElement{m, k, N};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    if (g.N != h.N) throw std::domain_error("group order mismatch in multiply");
    const int N = g.N;
    const int sign = h.m ? -1 : 1;
    int k = (N * h.m + sign * g.k + h.k) % N;
    if (k < 0) k += N;
    return GroupElement{(g.m + h.m) % 2, k, N};
}

GroupElement inverse(const GroupElement& g) {
    const int N = g.N;
    const int k = ((N - g.k) * (1 - g.m) + g.m * g.k) % N;
    return GroupElement{g.m, k, N};
}

Eigen::Matrix2cd fundamental_rep(const GroupElement& g) {
    const double phi = 2.0 * std::numbers::pi * g.k / g.N;
    const Complex w = std::polar(1.0, phi);
    Eigen::Matrix2cd rot;
    rot << w, 0.0, 0.0, std::conj(w);
    if (g.m == 0) return rot;
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    return x * rot;
}

double re_trace(const GroupElement& g) {
    return 2.0 * (1 - g.m) * std::cos(2.0 * std::numbers::pi * g.k / g.N);
}

int element_index(const GroupElement& g) { return g.N * g.m + g.k; }

GroupElement element_from_index(int index, int N) {
    check_order(N);
    if (index < 0 || index >= 2 * N) throw std::domain_error("element index out of range");
    return GroupElement{index / N, index % N, N};
}

std::string encode(const GroupElement& g) {
    int n = 0;
    while ((1 << n) < g.N) ++n;
    std::string bits(n + 1, '0');
    bits[0] = g.m ? '1' : '0';
    for (int b = 0; b < n; ++b)
        bits[1 + b] = (g.k >> (n - 1 - b)) & 1 ? '1' : '0';
    return bits;
}

GroupElement decode(const std::string& bits, int N) {
    check_order(N);
    int n = 0;
    while ((1 << n) < N) ++n;
    if (static_cast<int>(bits.size()) != n + 1)
        throw std::domain_error("encoded element must have " + std::to_string(n + 1) +
                                " bits");
    int k = 0;
    for (int b = 0; b < n; ++b) {
        const char c = bits[1 + b];
        if (c != '0' && c != '1') throw std::domain_error("encoded element must be binary");
        k = (k << 1) | (c - '0');
    }
    if (bits[0] != '0' && bits[0] != '1')
        throw std::domain_error("encoded element must be binary");
    return GroupElement{bits[0] - '0', k, N};
}

Eigen::MatrixXi group_table(int N) {
    check_order(N);
    if (N > 64) throw std::domain_error("group_table supports N <= 64");
    Eigen::MatrixXi table(2 * N, 2 * N);
    for (int i = 0; i < 2 * N; ++i)
        for (int j = 0; j < 2 * N; ++j)
            table(i, j) = element_index(
                multiply(element_from_index(i, N), element_from_index(j, N)));
    return table;
}

int irrep_dimension(const IrrepLabel& label) {
    return label.kind == IrrepKind::TwoDim ? 2 : 1;
}

double one_dim_irrep(IrrepKind kind, const GroupElement& g) {
    switch (kind) {
        case IrrepKind::A: return 1.0;
        case IrrepKind::B: return g.m ? -1.0 : 1.0;
        case IrrepKind::C: return g.k % 2 ? -1.0 : 1.0;
        case IrrepKind::D: return (g.m + g.k) % 2 ? -1.0 : 1.0;
        default: throw std::domain_error("not a 1-d irrep");
    }
}

Eigen::Matrix2cd two_dim_irrep(int l, const GroupElement& g) {
    if (l < 1 || l >= g.N / 2)
        throw std::domain_error("2-d irrep index l must lie in [1, N/2)");
    const double phi = 2.0 * std::numbers::pi * l * g.k / g.N;
    const Complex w = std::polar(1.0, phi);
    Eigen::Matrix2cd rot;
    rot << w, 0.0, 0.0, std::conj(w);
    if (g.m == 0) return rot;
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    return x * rot;
}

Complex irrep_value(const IrrepLabel& label, const GroupElement& g) {
    if (label.kind == IrrepKind::TwoDim)
        return two_dim_irrep(label.l, g)(label.i, label.j);
    return one_dim_irrep(label.kind, g);
}

std::vector<IrrepLabel> irrep_labels(int N) {
    check_order(N);
    std::vector<IrrepLabel> labels;
    labels.reserve(2 * N);
    labels.push_back({IrrepKind::A});
    labels.push_back({IrrepKind::B});
    labels.push_back({IrrepKind::C});
    labels.push_back({IrrepKind::D});
    for (int l = 1; l < N / 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                labels.push_back({IrrepKind::TwoDim, l, i, j});
    return labels;
}

} // namespace dgt
