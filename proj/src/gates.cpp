#include "dgt/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dgt/numeric.hpp"
#include "dgt/spectral.hpp"

namespace dgt {

namespace {

constexpr double kPi = std::numbers::pi;

int log2_of(int N) {
    if (!is_power_of_two(N) || N < 2)
        throw std::domain_error("group order must be a power of two >= 2");
    int n = 0;
    while ((1 << n) < N) ++n;
    return n;
}

} // namespace

Circuit build_controlled_ones_complement(int n, bool control_on_zero) {
    if (n < 1) throw std::domain_error("register needs at least one bit");
    Circuit c(n + 1, "ones_complement");
    for (int j = 0; j < n; ++j) c.add(gate_cnot(0, 1 + j, control_on_zero));
    return c;
}

Circuit build_controlled_increment(int n, bool control_on_zero) {
    if (n < 1) throw std::domain_error("register needs at least one bit");
    const int scratch = n >= 3 ? n - 2 : 0;
    Circuit c(n + 1 + scratch, "increment");
    const bool p = control_on_zero;
    // Rotation bit of significance j sits on qubit n - j; carry scratch
    // a_1..a_{n-2} sits after the data register.
    auto kq = [n](int j) { return n - j; };
    auto aq = [n](int i) { return n + i; }; // i = 1..n-2

    if (n == 1) {
        c.add(gate_cnot(0, kq(0), p));
        return c;
    }
    if (n == 2) {
        c.add(gate_toffoli(0, kq(0), kq(1), p, false));
        c.add(gate_cnot(0, kq(0), p));
        return c;
    }
    c.add(gate_toffoli(0, kq(0), aq(1), p, false));
    for (int j = 2; j <= n - 2; ++j) c.add(gate_toffoli(aq(j - 1), kq(j - 1), aq(j)));
    c.add(gate_toffoli(aq(n - 2), kq(n - 2), kq(n - 1)));
    for (int j = n - 2; j >= 2; --j) {
        c.add(gate_cnot(aq(j), kq(j)));
        c.add(gate_toffoli(aq(j - 1), kq(j - 1), aq(j)));
    }
    c.add(gate_cnot(aq(1), kq(1)));
    c.add(gate_toffoli(0, kq(0), aq(1), p, false));
    c.add(gate_cnot(0, kq(0), p));
    return c;
}

Circuit build_controlled_increment(int n) { return build_controlled_increment(n, true); }

Circuit build_inversion(int N) {
    const int n = log2_of(N);
    const int scratch = n >= 3 ? n - 2 : 0;
    Circuit c(n + 1 + scratch, "inversion_d" + std::to_string(N));
    c.append(build_controlled_ones_complement(n, true));
    c.append(build_controlled_increment(n, true));
    return c;
}

Circuit build_inversion_d8_simplified() {
    // The rotation LSB is flipped twice (complement, then the increment's
    // unconditional flip), so both CNOTs drop and the increment reads the
    // LSB with inverted polarity instead.
    Circuit c(5, "inversion_d8_simplified");
    const int m = 0, k2 = 1, k1 = 2, k0 = 3, a1 = 4;
    c.add(gate_cnot(m, k2, true));
    c.add(gate_cnot(m, k1, true));
    c.add(gate_toffoli(m, k0, a1, true, true));
    c.add(gate_toffoli(a1, k1, k2));
    c.add(gate_cnot(a1, k1));
    c.add(gate_toffoli(m, k0, a1, true, true));
    return c;
}

Circuit build_conditional_twos_complement(int N) {
    const int n = log2_of(N);
    const int scratch = n >= 3 ? n - 2 : 0;
    Circuit c(n + 1 + scratch, "conditional_twos_complement");
    c.append(build_controlled_ones_complement(n, false));
    c.append(build_controlled_increment(n, false));
    return c;
}

Circuit build_adder_forward(int n) {
    if (n < 1) throw std::domain_error("adder needs at least one bit");
    const int carries = n >= 2 ? n - 1 : 0;
    Circuit c(2 * n + carries, "adder_forward");
    auto A = [n](int j) { return n - 1 - j; };
    auto B = [n](int j) { return 2 * n - 1 - j; };
    auto C = [n](int i) { return 2 * n + i - 1; }; // carry into bit i, i = 1..n-1

    if (n >= 2) c.add(gate_toffoli(A(0), B(0), C(1)));
    for (int j = 1; j <= n - 2; ++j) {
        c.add(gate_toffoli(A(j), B(j), C(j + 1)));
        c.add(gate_toffoli(A(j), C(j), C(j + 1)));
        c.add(gate_toffoli(B(j), C(j), C(j + 1)));
    }
    c.add(gate_cnot(B(0), A(0)));
    for (int j = 1; j <= n - 1; ++j) {
        c.add(gate_cnot(B(j), A(j)));
        c.add(gate_cnot(C(j), A(j)));
    }
    return c;
}

Circuit build_in_place_adder(int n) {
    Circuit c = build_adder_forward(n);
    c.label = "adder";
    if (n < 2) return c;
    auto A = [n](int j) { return n - 1 - j; };
    auto B = [n](int j) { return 2 * n - 1 - j; };
    auto C = [n](int i) { return 2 * n + i - 1; };
    // Carries of A+B coincide with the borrows of (A+B)-B, so a majority
    // sweep over (not S, B, c) clears each carry qubit top-down.
    for (int j = n - 1; j >= 2; --j) {
        c.add(gate_toffoli(A(j - 1), B(j - 1), C(j), true, false));
        c.add(gate_toffoli(A(j - 1), C(j - 1), C(j), true, false));
        c.add(gate_toffoli(B(j - 1), C(j - 1), C(j)));
    }
    c.add(gate_toffoli(A(0), B(0), C(1), true, false));
    return c;
}

Circuit build_multiplication(int N, ToffoliStyle style) {
    const int n = log2_of(N);
    const int pool = n >= 2 ? n - 1 : 0;
    Circuit c(2 * (n + 1) + pool, "multiplication_d" + std::to_string(N));
    const int m1 = 0, m2 = n + 1;
    std::vector<int> k1(n), k2(n), scratch(pool);
    for (int j = 0; j < n; ++j) k1[j] = 1 + j;
    for (int j = 0; j < n; ++j) k2[j] = n + 2 + j;
    for (int i = 0; i < pool; ++i) scratch[i] = 2 * (n + 1) + i;

    const Circuit twos = build_conditional_twos_complement(N);
    std::vector<int> twos_map = {m2};
    twos_map.insert(twos_map.end(), k1.begin(), k1.end());
    for (int i = 0; i + 2 < n; ++i) twos_map.push_back(scratch[i]);

    const Circuit adder = build_in_place_adder(n);
    std::vector<int> adder_map = k2;
    adder_map.insert(adder_map.end(), k1.begin(), k1.end());
    for (int i = 0; i + 1 < n; ++i) adder_map.push_back(scratch[i]);

    c.append(twos, twos_map);
    c.append(adder, adder_map);
    c.append(twos, twos_map);
    c.add(gate_cnot(m1, m2));
    return expand_toffolis(c, style);
}

Circuit build_multiplication_d4() {
    Circuit c(6, "multiplication_d4");
    const int a1 = 0, b1 = 1, c1 = 2, a2 = 3, b2 = 4, c2 = 5;
    c.add(gate_cnot(a2, c2));
    c.add(gate_toffoli(c1, c2, b2));
    c.add(gate_cnot(a2, c2));
    c.add(gate_cnot(b1, b2));
    c.add(gate_cnot(c1, c2));
    c.add(gate_cnot(a1, a2));
    return c;
}

Circuit build_right_multiplication(int N, ToffoliStyle style) {
    const int n = log2_of(N);
    const Circuit mult = build_multiplication(N, style);
    Circuit c(mult.qubit_count, "right_multiplication_d" + std::to_string(N));
    const Circuit inv = build_inversion(N);
    std::vector<int> inv_map = {n + 1}; // h register: m2 then k2
    for (int j = 0; j < n; ++j) inv_map.push_back(n + 2 + j);
    for (int i = 0; i + 2 < n; ++i) inv_map.push_back(2 * (n + 1) + i);

    c.append(inv, inv_map);
    c.append(adjoint(mult));
    c.append(inv, inv_map);
    return c;
}

std::map<std::uint64_t, double> pauli_decompose_diagonal(
    const std::vector<double>& diagonal) {
    if (diagonal.size() > (1u << 12))
        throw std::domain_error("diagonal decomposition capped at 12 qubits");
    const std::vector<double> coeff = pauli_z_coefficients(diagonal);
    std::map<std::uint64_t, double> terms;
    for (std::size_t alpha = 0; alpha < coeff.size(); ++alpha)
        if (std::abs(coeff[alpha]) > 1e-14) terms[alpha] = coeff[alpha];
    return terms;
}

Circuit build_diagonal_phase(const std::vector<double>& angles,
                             const std::vector<int>& qubits, int qubit_count) {
    const std::size_t dim = angles.size();
    if (dim != (1ull << qubits.size()))
        throw std::domain_error("angle table size must be 2^(register size)");
    const int q = static_cast<int>(qubits.size());
    Circuit c(qubit_count, "diagonal_phase");
    const std::vector<double> coeff = pauli_z_coefficients(angles);
    for (std::uint64_t alpha = 1; alpha < dim; ++alpha) {
        if (std::abs(coeff[alpha]) <= 1e-15) continue;
        std::vector<int> members;
        for (int i = 0; i < q; ++i)
            if (alpha >> (q - 1 - i) & 1) members.push_back(qubits[i]);
        const int last = members.back();
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            c.add(gate_cnot(members[i], last));
        c.add(gate_rz(last, -2.0 * coeff[alpha])); // e^{i a Z...Z}
        for (std::size_t i = members.size() - 1; i-- > 0;)
            c.add(gate_cnot(members[i], last));
    }
    return c;
}

Circuit build_trace_direct(int N, double theta) {
    const int n = log2_of(N);
    std::vector<double> angles(2 * N);
    for (int z = 0; z < 2 * N; ++z)
        angles[z] = theta * re_trace(element_from_index(z, N));
    std::vector<int> qubits(n + 1);
    for (int i = 0; i <= n; ++i) qubits[i] = i;
    Circuit c = build_diagonal_phase(angles, qubits, n + 1);
    c.label = "trace_direct_d" + std::to_string(N);
    return c;
}

Circuit build_phase_kickback(int b, double theta) {
    if (b < 1) throw std::domain_error("kickback register needs at least one bit");
    Circuit c(b, "phase_kickback");
    for (int j = 1; j <= b; ++j)
        c.add(gate_rz(j - 1, theta * std::pow(2.0, 1 - j)));
    return c;
}

namespace {

std::uint64_t fixed_point_bits(double x, int b) {
    const double scaled = std::round(x * static_cast<double>(1ull << b));
    const auto max_code = static_cast<double>((1ull << b) - 1);
    return static_cast<std::uint64_t>(std::min(std::max(scaled, 0.0), max_code));
}

} // namespace

TrigTables make_trig_tables_exact(int N, int b) {
    const int n = log2_of(N);
    if (b < 2) throw std::domain_error("trace accuracy needs b >= 2");
    const int count = 1 << std::max(n - 2, 0);
    TrigTables t;
    t.value_bits = b;
    t.sin_bits.resize(count);
    t.cos_bits.resize(count);
    for (int k = 0; k < count; ++k) {
        const double phi = 2.0 * kPi * k / N;
        t.sin_bits[k] = fixed_point_bits(std::sin(phi), b);
        t.cos_bits[k] = fixed_point_bits(std::cos(phi), b);
    }
    return t;
}

TrigTables make_trig_tables_squaring(int N, int b, int r) {
    const int n = log2_of(N);
    if (b < 2) throw std::domain_error("trace accuracy needs b >= 2");
    const int count = 1 << std::max(n - 2, 0);
    TrigTables t;
    t.value_bits = b;
    t.sin_bits.resize(count);
    t.cos_bits.resize(count);
    for (int k = 0; k < count; ++k) {
        const CosSin cs = trig_by_repeated_squaring(2.0 * kPi * k / N, r);
        t.sin_bits[k] = fixed_point_bits(cs.sin, b);
        t.cos_bits[k] = fixed_point_bits(cs.cos, b);
    }
    return t;
}

namespace {

/// XOR-in a value table over [address bits..., value bits...]; involutive.
std::shared_ptr<const OracleTable> xor_table_oracle(
    const std::vector<std::uint64_t>& values, int address_bits, int value_bits,
    const std::string& label) {
    auto t = std::make_shared<OracleTable>();
    t->label = label;
    t->permutation.resize(1ull << (address_bits + value_bits));
    for (std::uint64_t a = 0; a < (1ull << address_bits); ++a)
        for (std::uint64_t y = 0; y < (1ull << value_bits); ++y)
            t->permutation[(a << value_bits) | y] = (a << value_bits) | (y ^ values[a]);
    return t;
}

} // namespace

Circuit build_trace_ancilla(int N, double theta, int b, const TrigTables& tables) {
    const int n = log2_of(N);
    if (b < 2) throw std::domain_error("trace accuracy needs b >= 2");
    if (tables.value_bits != b ||
        tables.sin_bits.size() != (1ull << std::max(n - 2, 0)))
        throw std::domain_error("trig table shape mismatch");

    const bool has_quadrant = n >= 2; // k_{n-2} exists
    const int flag = has_quadrant ? n + 1 + 2 * b : -1;
    const int width = n + 1 + 2 * b + (has_quadrant ? 1 : 0);
    Circuit c(width, "trace_ancilla_d" + std::to_string(N));

    const int sign_bit = 1; // k_{n-1}
    std::vector<int> sin_reg(b), cos_reg(b);
    for (int j = 0; j < b; ++j) sin_reg[j] = n + 1 + j;
    for (int j = 0; j < b; ++j) cos_reg[j] = n + 1 + b + j;

    // Step 1: write the b-bit tables into the ancilla registers.
    Circuit compute(width);
    if (n >= 3) {
        std::vector<int> addr(n - 2);
        for (int i = 0; i < n - 2; ++i) addr[i] = 3 + i; // k_{n-3}..k_0
        std::vector<int> sin_qs = addr, cos_qs = addr;
        sin_qs.insert(sin_qs.end(), sin_reg.begin(), sin_reg.end());
        cos_qs.insert(cos_qs.end(), cos_reg.begin(), cos_reg.end());
        compute.add(gate_oracle(sin_qs,
                                xor_table_oracle(tables.sin_bits, n - 2, b, "sin_table")));
        compute.add(gate_oracle(cos_qs,
                                xor_table_oracle(tables.cos_bits, n - 2, b, "cos_table")));
    } else {
        for (int j = 0; j < b; ++j) {
            if (tables.sin_bits[0] >> (b - 1 - j) & 1) compute.add(gate_x(sin_reg[j]));
            if (tables.cos_bits[0] >> (b - 1 - j) & 1) compute.add(gate_x(cos_reg[j]));
        }
    }
    c.append(compute);

    // Step 2: phase kickback.  The register bit holding 2^{-j} contributes
    // +-2 theta 2^{-j}, with the sign set by k_{n-1} and the cos/sin branch
    // by k_{n-2}; everything is conditioned on m = 0.
    auto kick = [&](const std::vector<int>& reg, bool quadrant_value, double sign) {
        if (has_quadrant)
            c.add(gate_toffoli(0, 2, flag, true, !quadrant_value));
        for (int j = 1; j <= b; ++j) {
            const double angle = sign * 2.0 * theta * std::pow(2.0, -j);
            const int bit = reg[j - 1];
            if (has_quadrant) {
                c.add(gate_ccphase(flag, bit, sign_bit, angle, false, false, true));
                c.add(gate_ccphase(flag, bit, sign_bit, -angle, false, false, false));
            } else {
                c.add(gate_ccphase(0, bit, sign_bit, angle, true, false, true));
                c.add(gate_ccphase(0, bit, sign_bit, -angle, true, false, false));
            }
        }
        if (has_quadrant)
            c.add(gate_toffoli(0, 2, flag, true, !quadrant_value));
    };
    kick(cos_reg, false, +1.0);
    if (has_quadrant) kick(sin_reg, true, -1.0);

    // Step 3: uncompute the tables.
    c.append(adjoint(compute));
    return c;
}

Circuit build_trace_ancilla(int N, double theta, int b) {
    return build_trace_ancilla(N, theta, b, make_trig_tables_exact(N, b));
}

Circuit build_qft_cyclic(int n) {
    if (n < 1) throw std::domain_error("QFT register needs at least one bit");
    Circuit c(n, "qft_z" + std::to_string(1 << n));
    for (int t = 0; t < n; ++t) {
        c.add(gate_h(t));
        for (int u = t + 1; u < n; ++u)
            c.add(gate_cphase(u, t, kPi / std::pow(2.0, u - t)));
    }
    for (int i = 0; i < n / 2; ++i) c.add(gate_swap(i, n - 1 - i));
    return c;
}

namespace {

/// Hadamard on the reflection qubit, selected on all x-bits (qubits 2..n)
/// being zero.  For more than two selection bits a Toffoli ladder folds
/// them pairwise into scratch starting at `ladder_base`.
void add_conditional_hadamard(Circuit& c, int n, int ladder_base) {
    const int m = 0;
    if (n == 1) {
        c.add(gate_h(m));
        return;
    }
    add_ry(c, m, -kPi / 4);
    if (n == 2) {
        c.add(gate_cz(2, m, true, false));
    } else if (n == 3) {
        c.add(gate_ccphase(2, 3, m, kPi, true, true, false));
    } else {
        const int folds = n - 3;
        c.add(gate_toffoli(2, 3, ladder_base, true, true));
        for (int i = 1; i < folds; ++i)
            c.add(gate_toffoli(ladder_base + i - 1, 3 + i, ladder_base + i, false, true));
        c.add(gate_ccphase(ladder_base + folds - 1, n, m, kPi, false, true, false));
        for (int i = folds - 1; i >= 1; --i)
            c.add(gate_toffoli(ladder_base + i - 1, 3 + i, ladder_base + i, false, true));
        c.add(gate_toffoli(2, 3, ladder_base, true, true));
    }
    add_ry(c, m, kPi / 4);
}

} // namespace

Circuit build_change_of_basis(int N) {
    const int n = log2_of(N);
    const int gadget = n + 1;
    const int ladder = n >= 4 ? n - 3 : 0;
    Circuit c(n + 2 + ladder, "change_of_basis_d" + std::to_string(N));
    // Conditional-phase gadget: phase base resolved against the dense
    // Fourier oracle, which fixes the CCPHASE angle to zero for every
    // power-of-two N.  The gadget is kept for its ancilla-and-kickback
    // structure; it contributes one entangling gate and returns the
    // scratch qubit to |0>.
    const double omega_angle = 0.0;
    c.add(gate_x(gadget));
    c.add(gate_ccphase(0, 1, gadget, omega_angle));
    c.add(gate_x(gadget));
    add_conditional_hadamard(c, n, gadget + 1);
    return c;
}

Circuit build_fourier(int N) {
    const int n = log2_of(N);
    const Circuit cob = build_change_of_basis(N);
    Circuit c(cob.qubit_count, "fourier_d" + std::to_string(N));
    std::vector<int> rot(n);
    for (int j = 0; j < n; ++j) rot[j] = 1 + j;
    c.append(build_qft_cyclic(n), rot);
    c.append(cob);
    return c;
}

Circuit build_fourier_lean(int N) {
    const int n = log2_of(N);
    const int ladder = n >= 4 ? n - 3 : 0;
    Circuit c(n + 1 + ladder, "fourier_lean_d" + std::to_string(N));
    std::vector<int> rot(n);
    for (int j = 0; j < n; ++j) rot[j] = 1 + j;
    c.append(build_qft_cyclic(n), rot);
    add_conditional_hadamard(c, n, n + 1);
    return c;
}

int plaquette_trace_data_qubits(int N) { return 5 * (log2_of(N) + 1); }

Circuit build_plaquette_trace(int N, double theta, ToffoliStyle style) {
    const int n = log2_of(N);
    const int reg = n + 1;
    const int pool = n >= 2 && N != 4 ? n - 1 : 0; // D_4 uses the six-qubit variant
    Circuit c(5 * reg + pool, "plaquette_trace_d" + std::to_string(N));

    auto link = [reg](int l) {
        std::vector<int> qs(reg);
        for (int i = 0; i < reg; ++i) qs[i] = l * reg + i;
        return qs;
    };
    const std::vector<int> work = link(4);
    std::vector<int> scratch(pool);
    for (int i = 0; i < pool; ++i) scratch[i] = 5 * reg + i;

    const Circuit inv = build_inversion(N);
    auto inv_map = [&](int l) {
        std::vector<int> map = link(l);
        for (int i = 0; i + 2 < n; ++i) map.push_back(scratch[i]);
        return map;
    };

    Circuit mult = N == 4 ? build_multiplication_d4() : build_multiplication(N);
    auto mult_map = [&](int l) {
        std::vector<int> map = link(l);
        map.insert(map.end(), work.begin(), work.end());
        if (N != 4)
            for (int i = 0; i + 1 < n; ++i) map.push_back(scratch[i]);
        return map;
    };

    // Accumulate U1 U2 U3^-1 U4^-1 into the work register by left
    // multiplication, innermost factor first.
    Circuit compute(c.qubit_count);
    compute.append(inv, inv_map(3));
    compute.append(mult, mult_map(3));
    compute.append(inv, inv_map(3));
    compute.append(inv, inv_map(2));
    compute.append(mult, mult_map(2));
    compute.append(inv, inv_map(2));
    compute.append(mult, mult_map(1));
    compute.append(mult, mult_map(0));

    c.append(compute);
    c.append(build_trace_direct(N, theta), work);
    c.append(adjoint(compute));
    return expand_toffolis(c, style);
}

} // namespace dgt
